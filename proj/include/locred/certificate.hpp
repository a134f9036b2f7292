#pragma once

#include <string>
#include <string_view>

#include "locred/construct.hpp"

namespace locred {

inline constexpr std::string_view kCertificateSchema = "locred-cert/1";

/// JSON text with a fixed key order; integers that may exceed 64 bits and
/// polynomials ("c0,c1,...") are written as decimal strings.
std::string certificate_to_json(const Certificate& cert);
/// Throws MalformedCertificate on schema or type errors.
Certificate certificate_from_json(std::string_view text);

std::string verdict_to_json(const Verdict& v);

}  // namespace locred
