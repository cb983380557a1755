#include "lpopnorm/serialize.hpp"

#include <fmt/format.h>

namespace lpopnorm {

nlohmann::json kernel_to_json(const ToeplitzKernel& k) {
  if (k.is_geometric()) {
    const auto& g = k.geometric_params();
    return {{"type", "geometric"}, {"ratio", g.ratio}, {"scale", g.scale}};
  }
  const auto c = k.coeffs();
  return {{"type", "explicit"}, {"coeffs", std::vector<double>(c.begin(), c.end())}};
}

ToeplitzKernel kernel_from_json(const nlohmann::json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    if (type == "geometric") {
      return ToeplitzKernel::geometric(j.at("ratio").get<double>(), j.value("scale", 1.0));
    }
    if (type == "explicit") {
      return ToeplitzKernel::explicit_coeffs(j.at("coeffs").get<std::vector<double>>());
    }
    throw ArgumentError(fmt::format("unknown kernel type '{}'", type));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(fmt::format("malformed kernel JSON: {}", e.what()));
  }
}

nlohmann::json certificate_to_json(const certify::NormCertificate& cert) {
  const auto w = cert.witness.values();
  return {
      {"schema_version", kSchemaVersion},
      {"upper", cert.upper},
      {"lower", cert.lower},
      {"gap", cert.gap()},
      {"p", cert.p.p()},
      {"conj", cert.p.conj()},
      {"method_upper", certify::to_string(cert.method_upper)},
      {"method_lower", certify::to_string(cert.method_lower)},
      {"N", cert.N},
      {"iterations", cert.iterations},
      {"indicator_lower", cert.indicator_lower},
      {"power_lower", cert.power_lower},
      {"residuals", cert.residuals},
      {"witness", std::vector<double>(w.begin(), w.end())},
  };
}

}  // namespace lpopnorm
