#include "chord/json_io.hpp"

#include <sstream>

namespace chord {

Json spectrum_to_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& [i, m] : s.entries()) arr.push_back(Json::array({i, m}));
  return arr;
}

Spectrum spectrum_from_json(const Json& j) {
  Spectrum s;
  for (const auto& e : j) s.bump(e.at(0).get<int>(), e.at(1).get<int>());
  return s;
}

Json series_to_json(const Series& s) {
  Json arr = Json::array();
  for (const auto& [key, coeff] : s.terms()) {
    Json term;
    term["x"] = key.xExp;
    term["s"] = spectrum_to_json(key.s);
    term["t"] = spectrum_to_json(key.t);
    term["num"] = coeff.get_num().get_str();
    term["den"] = coeff.get_den().get_str();
    arr.push_back(std::move(term));
  }
  return arr;
}

Series series_from_json(const Json& j) {
  Series s;
  for (const auto& term : j) {
    TermKey key;
    key.xExp = term.at("x").get<int>();
    key.s = spectrum_from_json(term.at("s"));
    key.t = spectrum_from_json(term.at("t"));
    Rat num(term.at("num").get<std::string>());
    Rat den(term.at("den").get<std::string>());
    s.add_term(key, num / den);
  }
  return s;
}

std::string spectrum_to_compact(const Spectrum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [i, m] : s.entries()) {
    if (!out.empty()) out += '+';
    out += std::to_string(i) + ':' + std::to_string(m);
  }
  return out;
}

std::vector<CountRow> state_to_rows(const EvolutionState& state) {
  const ModelSpec& spec = state.spec();
  const bool nonor = spec.variant == Variant::NonOrientable;
  std::vector<CountRow> rows;
  for (int k = 0; k <= state.computed_k(); ++k) {
    for (const auto& [key, coeff] : state.slice(k).terms()) {
      CountRow row;
      row.variant = nonor ? "non-orientable" : "orientable";
      row.k = k;
      row.gOrH = nonor ? key.xExp + 2 : (key.xExp + 2) / 2;
      const long b = key.t.size();
      const Rat value = coeff * Rat(factorial(static_cast<unsigned>(b)));
      if (!is_integer(value) || value < 0)
        throw IntegralityViolation("non-integral table entry");
      row.count = value.get_num();
      switch (spec.kind) {
        case SpectrumKind::Point:
          row.model = "point";
          row.l = key.s.weight();
          row.bSpec = key.t;
          row.nOrP = key.s;
          break;
        case SpectrumKind::Length:
          row.model = "length";
          row.l = 0;
          row.bSpec = key.t;
          row.nOrP = key.s;
          break;
        case SpectrumKind::Vertex:
          row.model = "vertex";
          row.l = 0;
          row.k = k + 1;  // slice k holds the (k+1)-chord gluings
          row.bSpec = Spectrum::unit(1);
          row.nOrP = key.s;
          break;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Json rows_to_json(const std::vector<CountRow>& rows, const Json& header) {
  Json out;
  out["header"] = header;
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["variant"] = r.variant;
    row["model"] = r.model;
    row["g_or_h"] = r.gOrH;
    row["k"] = r.k;
    row["l"] = r.l;
    row["b_spec"] = spectrum_to_json(r.bSpec);
    row["n_or_p_spec"] = spectrum_to_json(r.nOrP);
    row["count"] = r.count.get_str();
    arr.push_back(std::move(row));
  }
  out["rows"] = std::move(arr);
  return out;
}

std::string rows_to_csv(const std::vector<CountRow>& rows) {
  std::ostringstream out;
  out << "variant,model,g_or_h,k,l,b_spec,n_or_p_spec,count\n";
  for (const auto& r : rows)
    out << r.variant << ',' << r.model << ',' << r.gOrH << ',' << r.k << ',' << r.l
        << ',' << spectrum_to_compact(r.bSpec) << ',' << spectrum_to_compact(r.nOrP)
        << ',' << r.count.get_str() << '\n';
  return out.str();
}

}  // namespace chord
