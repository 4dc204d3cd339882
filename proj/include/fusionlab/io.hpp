#pragma once

#include "fusionlab/desirability.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionlab {

using Json = nlohmann::ordered_json;

class CertificateFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Coefficients that fit in int64 are plain numbers, larger ones decimal strings.
inline Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) return v.convert_to<long long>();
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw CertificateFormatError("expected an integer coefficient, got " + j.dump());
}

inline Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

inline IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw CertificateFormatError("polynomial must be an ascending coefficient array");
  std::vector<BigInt> c;
  for (const auto& e : j) c.push_back(bigint_from_json(e));
  return IntPolynomial(std::move(c));
}

inline Json to_json(const FusionPartition& p) {
  Json a = Json::array();
  for (const auto& b : p.blocks) a.push_back(b);
  return a;
}

inline Json scheme_json(const AssociationScheme& s) {
  Json j;
  j["size"] = s.size();
  j["rank"] = s.rank();
  j["star"] = s.stars();
  j["valencies"] = s.valencies();
  j["color"] = s.colors();  // row-major
  return j;
}

inline Json group_json(const FiniteGroup& g) {
  Json j;
  j["key"] = g.name();
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["abelian"] = g.is_abelian();
  j["generators"] = g.generator_names();
  Json census = Json::object();
  for (const auto& [order, count] : order_census(g)) census[std::to_string(order)] = count;
  j["order_census"] = std::move(census);
  return j;
}

inline Json witness_json(const FusionPartition& p, const std::vector<ClassId>& block, const IntegralityCertificate& cert) {
  Json w;
  w["blocks"] = to_json(p);
  w["failing_block"] = block;
  w["char_poly"] = to_json(cert.char_poly);
  w["min_poly"] = to_json(min_poly_symmetric(cert.char_poly));
  w["residual"] = to_json(cert.residual);
  return w;
}

inline Json certificate_json(const std::string& group, const DesirabilityVerdict& v) {
  Json j;
  j["group"] = group;
  j["verdict"] = to_string(v.kind);
  if (v.kind == DesirabilityVerdict::Kind::Desirable) j["fusions_examined"] = v.fusions_examined;
  if (v.order_violation) j["order_violation"] = {{"element", v.order_violation->element}, {"order", v.order_violation->order}};
  if (v.witness) j["witness"] = witness_json(v.witness->partition, v.witness->failing_block, v.witness->certificate);
  if (v.kind == DesirabilityVerdict::Kind::Unknown) j["reason"] = v.reason;
  return j;
}

inline Json report_json(const WitnessReport& r) {
  Json j;
  j["group"] = r.group;
  j["verdict"] = r.non_integral ? "undesirable" : "inconclusive";
  Json w;
  w["blocks"] = to_json(r.partition);
  w["failing_block"] = r.failing_block;
  w["char_poly"] = to_json(r.char_poly);
  w["min_poly"] = to_json(r.min_poly);
  w["residual"] = to_json(r.residual);
  j["witness"] = std::move(w);
  return j;
}

inline Json suite_json(const SuiteReport& report, bool timing) {
  Json items = Json::array();
  for (const auto& i : report.items) {
    Json j;
    j["name"] = i.name;
    j["group"] = i.group;
    j["kind"] = i.kind;
    j["passed"] = i.passed;
    j["expected"] = i.expected;
    j["actual"] = i.actual;
    j["detail"] = i.detail;
    // integer microseconds, and only on request: default output is byte-stable
    if (timing) j["elapsed_us"] = static_cast<long long>(i.elapsed_ms * 1000.0);
    items.push_back(std::move(j));
  }
  return items;
}

struct CertificateCheck {
  bool ok = false;
  std::string verdict;  // verdict reproduced from scratch
  std::string message;
};

// Re-derives a certificate's verdict. Witnesses are re-validated and their
// polynomials recomputed; desirable claims are re-run through the full search.
inline CertificateCheck verify_certificate(const Json& cert, const FusionBudget& budget = {}) {
  CertificateCheck out;
  if (!cert.is_object() || !cert.contains("group") || !cert.contains("verdict"))
    throw CertificateFormatError("certificate needs \"group\" and \"verdict\"");
  auto g = catalog(cert.at("group").get<std::string>());
  auto claimed = cert.at("verdict").get<std::string>();
  if (claimed == "undesirable") {
    if (!cert.contains("witness")) throw CertificateFormatError("undesirable certificate without a witness");
    const auto& w = cert.at("witness");
    FusionPartition p;
    try {
      p = FusionPartition(w.at("blocks").get<std::vector<std::vector<ClassId>>>());
    } catch (const nlohmann::json::exception& e) {
      throw CertificateFormatError(std::string("malformed witness blocks: ") + e.what());
    }
    auto block = w.at("failing_block").get<std::vector<ClassId>>();
    WitnessReport r;
    try {
      r = verify_witness(g, p, block);
    } catch (const std::invalid_argument& e) {
      out.message = e.what();
      return out;
    }
    out.verdict = r.non_integral ? "undesirable" : "inconclusive";
    bool same = r.char_poly == polynomial_from_json(w.at("char_poly")) && r.min_poly == polynomial_from_json(w.at("min_poly")) &&
                r.residual == polynomial_from_json(w.at("residual"));
    out.ok = r.non_integral && same;
    out.message = !r.non_integral ? "failing block is integral" : same ? "witness verified" : "polynomials do not match the recomputation";
    return out;
  }
  if (claimed == "desirable") {
    auto v = check_desirable(g, budget, std::numeric_limits<std::size_t>::max());
    out.verdict = to_string(v.kind);
    out.ok = v.kind == DesirabilityVerdict::Kind::Desirable;
    if (out.ok && cert.contains("fusions_examined") && cert.at("fusions_examined").get<std::size_t>() != v.fusions_examined) {
      out.ok = false;
      out.message = "fusion count differs";
    } else {
      out.message = out.ok ? "all symmetric fusions integral" : v.reason;
    }
    return out;
  }
  if (claimed == "unknown") {
    out.verdict = "unknown";
    out.ok = true;
    out.message = "nothing to verify";
    return out;
  }
  throw CertificateFormatError("unknown verdict \"" + claimed + "\"");
}

}  // namespace fusionlab
