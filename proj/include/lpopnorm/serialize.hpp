#pragma once

// JSON encodings of kernels and certificates.
//
// Kernel:      {"type":"geometric","ratio":r,"scale":s}
//              {"type":"explicit","coeffs":[a_1, a_2, ...]}
// Certificate: {"schema_version":"1","upper":..,"lower":..,"gap":..,"p":..,"conj":..,
//               "method_upper":"schur-closed-form"|"schur-numeric",
//               "method_lower":"indicator"|"power-iteration",
//               "N":..,"iterations":..,"indicator_lower":..,"power_lower":..,
//               "residuals":[..],"witness":[..]}

#include <string_view>

#include "json.hpp"
#include "lpopnorm/certify.hpp"
#include "lpopnorm/operators.hpp"

namespace lpopnorm {

inline constexpr std::string_view kSchemaVersion = "1";

nlohmann::json kernel_to_json(const ToeplitzKernel& k);
/// Throws ArgumentError on an unknown type tag, missing fields or invalid coefficients.
ToeplitzKernel kernel_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const certify::NormCertificate& cert);

}  // namespace lpopnorm
