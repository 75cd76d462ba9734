#include "permsing/report_io.hpp"

#include <sstream>

#include "permsing/error.hpp"

namespace permsing {

using nlohmann::json;

namespace {

template <typename Enum>
Enum enum_from(const json& j, std::initializer_list<Enum> options) {
  const auto text = j.get<std::string>();
  for (auto e : options)
    if (to_string(e) == text) return e;
  throw InvalidInput("unexpected verdict '" + text + "'");
}

}  // namespace

json to_json(ExtHalf v) {
  if (!v.is_finite()) return {{"finite", false}, {"value", nullptr}};
  return {{"finite", true}, {"value", {{"num", v.numerator()}, {"den", v.denominator()}}}};
}

ExtHalf ext_half_from_json(const json& j) {
  if (!j.at("finite").get<bool>()) return ExtHalf::neg_infinity();
  const auto num = j.at("value").at("num").get<std::int64_t>();
  const auto den = j.at("value").at("den").get<std::int64_t>();
  if (den == 1) return ExtHalf::integer(num);
  if (den == 2) return ExtHalf::from_halves(num);
  throw InvalidInput("half-integer denominator must be 1 or 2");
}

json to_json(const GorensteinReport& g) {
  json out{{"kx_index_divides", g.kx_index_divides}, {"branch_component_count", g.branch_component_count}};
  out["boundary_coefficient"] =
      g.boundary_coefficient ? json{{"num", g.boundary_coefficient->num}, {"den", g.boundary_coefficient->den}} : json(nullptr);
  out["b_cartier_index_divides"] = g.b_cartier_index_divides ? json(*g.b_cartier_index_divides) : json(nullptr);
  return out;
}

json to_json(const ClassificationReport& r) {
  json trace = json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"field", t.field}, {"rule", t.rule}, {"anchor", t.anchor}, {"detail", t.detail}, {"derived", t.derived}});
  return {
      {"n", r.n},
      {"p", r.p},
      {"group_order", r.group_order},
      {"generators", r.generators},
      {"has_transposition", r.has_transposition},
      {"canonical", to_string(r.canonical)},
      {"pair_klt", to_string(r.pair_klt)},
      {"pair_lc", to_string(r.pair_lc)},
      {"stringy_dim_bound", to_json(r.stringy_dim_bound)},
      {"limit_minus_infinity", r.limit_minus_infinity},
      {"gorenstein", to_json(r.gorenstein)},
      {"non_free_locus_dim_bound", r.non_free_locus_dim_bound ? json(*r.non_free_locus_dim_bound) : json(nullptr)},
      {"trace", trace},
  };
}

ClassificationReport report_from_json(const json& j) {
  try {
    ClassificationReport r;
    r.n = j.at("n").get<int>();
    r.p = j.at("p").get<int>();
    r.group_order = j.at("group_order").get<std::size_t>();
    r.generators = j.at("generators").get<std::vector<std::string>>();
    r.has_transposition = j.at("has_transposition").get<bool>();
    r.canonical = enum_from(j.at("canonical"), {CanonicalVerdict::Certified, CanonicalVerdict::NotCertified});
    r.pair_klt = enum_from(j.at("pair_klt"), {KltVerdict::True, KltVerdict::False, KltVerdict::Unknown});
    r.pair_lc = enum_from(j.at("pair_lc"), {LcVerdict::True, LcVerdict::Unknown});
    r.stringy_dim_bound = ext_half_from_json(j.at("stringy_dim_bound"));
    r.limit_minus_infinity = j.at("limit_minus_infinity").get<bool>();
    const auto& g = j.at("gorenstein");
    r.gorenstein.kx_index_divides = g.at("kx_index_divides").get<int>();
    r.gorenstein.branch_component_count = g.at("branch_component_count").get<int>();
    if (!g.at("boundary_coefficient").is_null())
      r.gorenstein.boundary_coefficient =
          GorensteinReport::Coefficient{g["boundary_coefficient"].at("num").get<int>(), g["boundary_coefficient"].at("den").get<int>()};
    if (!g.at("b_cartier_index_divides").is_null()) r.gorenstein.b_cartier_index_divides = g["b_cartier_index_divides"].get<int>();
    if (!j.at("non_free_locus_dim_bound").is_null()) r.non_free_locus_dim_bound = j["non_free_locus_dim_bound"].get<int>();
    for (const auto& t : j.at("trace"))
      r.trace.push_back({t.at("field").get<std::string>(), t.at("rule").get<std::string>(), t.at("anchor").get<std::string>(),
                         t.at("detail").get<std::string>(), t.at("derived").get<bool>()});
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\n"
      << "p: " << r.p << "\n"
      << "group_order: " << r.group_order << "\n"
      << "has_transposition: " << (r.has_transposition ? "true" : "false") << "\n"
      << "canonical: " << to_string(r.canonical) << "\n"
      << "pair_klt: " << to_string(r.pair_klt) << "\n"
      << "pair_lc: " << to_string(r.pair_lc) << "\n"
      << "stringy_dim_bound: " << r.stringy_dim_bound.to_string() << "\n"
      << "kx_index_divides: " << r.gorenstein.kx_index_divides << "\n"
      << "boundary_coefficient: ";
  if (r.gorenstein.boundary_coefficient) {
    const auto c = *r.gorenstein.boundary_coefficient;
    out << c.num;
    if (c.den != 1) out << "/" << c.den;
  } else {
    out << "absent";
  }
  out << "\nbranch_components: " << r.gorenstein.branch_component_count << "\n"
      << "non_free_locus_dim_bound: "
      << (r.non_free_locus_dim_bound ? std::to_string(*r.non_free_locus_dim_bound) : std::string("absent")) << "\n"
      << "trace:\n";
  for (const auto& t : r.trace)
    out << "  [" << t.field << "] " << t.rule << " <" << t.anchor << ">" << (t.derived ? " (derived)" : "") << ": " << t.detail
        << "\n";
  return out.str();
}

}  // namespace permsing
