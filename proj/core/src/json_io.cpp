#include "etalift/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace etalift {

namespace {

using nlohmann::json;

// stride = denom when every nonzero entry sits at a multiple of denom.
template <typename S>
size_t detect_stride(const S& a) {
  if (a.denom() <= 1) return 1;
  for (size_t i = 0; i < a.prec(); ++i)
    if (a[i] != 0 && i % (size_t)a.denom() != 0) return 1;
  return (size_t)a.denom();
}

}  // namespace

std::string series_to_json(const FracSeries& a) {
  json j;
  j["denom"] = a.denom();
  j["valuation"] = a.val();
  size_t stride = detect_stride(a);
  if (stride > 1) j["stride"] = stride;
  json arr = json::array();
  for (size_t i = 0; i < a.prec(); i += stride) arr.push_back(a[i].get_str());
  j["coeffs"] = std::move(arr);
  return j.dump();
}

std::string series_to_json(const ModSeries& a) {
  json j;
  j["denom"] = a.denom();
  j["valuation"] = a.val();
  j["modulus"] = a.modulus();
  size_t stride = detect_stride(a);
  if (stride > 1) j["stride"] = stride;
  json arr = json::array();
  for (size_t i = 0; i < a.prec(); i += stride) arr.push_back(a[i]);
  j["coeffs"] = std::move(arr);
  return j.dump();
}

FracSeries frac_series_from_json(const std::string& text) {
  json j = json::parse(text);
  int denom = j.value("denom", 1);
  long long val = j.value("valuation", (long long)0);
  size_t stride = (size_t)j.value("stride", 1);
  const json& arr = j.at("coeffs");
  size_t n = arr.size();
  std::vector<mpq_class> c(n == 0 ? 0 : (n - 1) * stride + 1);
  for (size_t i = 0; i < n; ++i) {
    mpq_class q;
    if (arr[i].is_string()) {
      q = mpq_class(arr[i].get<std::string>());
      q.canonicalize();
    } else {
      q = mpq_class((long)arr[i].get<long long>());
    }
    c[i * stride] = std::move(q);
  }
  return FracSeries(denom, val, std::move(c));
}

ModSeries mod_series_from_json(const std::string& text) {
  json j = json::parse(text);
  uint64_t modulus = j.at("modulus").get<uint64_t>();
  int denom = j.value("denom", 1);
  long long val = j.value("valuation", (long long)0);
  size_t stride = (size_t)j.value("stride", 1);
  const json& arr = j.at("coeffs");
  size_t n = arr.size();
  std::vector<uint64_t> c(n == 0 ? 0 : (n - 1) * stride + 1, 0);
  for (size_t i = 0; i < n; ++i) c[i * stride] = arr[i].get<uint64_t>() % modulus;
  return ModSeries(modulus, denom, val, std::move(c));
}

RealCharacter character_from_string(const std::string& text) {
  if (text.empty() || text == "1") return RealCharacter::trivial();
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("character: expected \"1\" or kind:args, got " + text);
  std::string kind = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  if (kind == "principal") return RealCharacter::principal(std::stoll(args));
  if (kind == "jacobi") return RealCharacter::jacobi_bottom(std::stoll(args));
  if (kind == "kron") {
    auto comma = args.find(',');
    if (comma == std::string::npos) return RealCharacter::kron_top(std::stoll(args));
    return RealCharacter::kron_top(std::stoll(args.substr(0, comma)),
                                   std::stoll(args.substr(comma + 1)));
  }
  throw std::invalid_argument("character: unknown kind " + kind);
}

std::string character_to_string(const RealCharacter& chi) {
  if (chi.is_trivial()) return "1";
  if (chi.disc() == 1) return "principal:" + std::to_string(chi.modulus());
  return "kron:" + std::to_string(chi.disc()) + "," + std::to_string(chi.modulus());
}

HalfIntegralMeta meta_from_json(const std::string& text) {
  json j = json::parse(text);
  HalfIntegralMeta m;
  m.lambda = j.at("lambda").get<long long>();
  m.level = j.at("N").get<long long>();
  m.r = j.at("r").get<long long>();
  m.psi = character_from_string(j.value("psi", std::string("1")));
  return m;
}

std::string meta_to_json(const HalfIntegralMeta& meta) {
  json j;
  j["N"] = meta.level;
  j["lambda"] = meta.lambda;
  j["psi"] = character_to_string(meta.psi);
  j["r"] = meta.r;
  return j.dump();
}

}  // namespace etalift
