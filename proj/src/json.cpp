#include "tck/json.hpp"

#include "tck/poly_io.hpp"

namespace tck {

namespace {

Json monomials(const std::vector<Monomial>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

Json polys(const std::vector<Polynomial>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

Json order_json(const MonomialOrder& ord) {
  Json pri = Json::array();
  for (int p : ord.priority()) pri.push_back(std::string(variable_name(static_cast<std::size_t>(p))));
  return {{"kind", to_string(ord.kind())}, {"priority", pri}};
}

[[noreturn]] void bad(const std::string& why) { throw Error(Errc::Parse, "complex JSON: " + why); }

}  // namespace

Json complex_to_json(const FreeComplex& c) {
  Json maps = Json::array();
  for (const auto& m : c.maps) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(r, k)));
      rows.push_back(std::move(row));
    }
    maps.push_back(std::move(rows));
  }
  return {{"levels", c.levels}, {"maps", maps}};
}

FreeComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("levels") || !j.contains("maps")) bad("expected an object with levels and maps");
  const auto& levels = j.at("levels");
  const auto& maps = j.at("maps");
  if (!levels.is_array() || !maps.is_array()) bad("levels and maps must be arrays");

  FreeComplex c;
  for (const auto& lvl : levels) {
    if (!lvl.is_array()) bad("each level must be an array of integers");
    std::vector<int> shifts;
    for (const auto& s : lvl) {
      if (!s.is_number_integer()) bad("shifts must be integers");
      shifts.push_back(s.get<int>());
    }
    c.levels.push_back(std::move(shifts));
  }
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& rows = maps[k];
    if (!rows.is_array()) bad("each map must be an array of rows");
    // Zero-row maps keep their column count from the levels.
    std::size_t ncols = rows.empty() ? (k + 1 < c.levels.size() ? c.levels[k + 1].size() : 0) : rows[0].size();
    PolyMatrix m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != ncols) bad("ragged matrix in map " + std::to_string(k + 1));
      for (std::size_t col = 0; col < ncols; ++col) {
        if (!rows[r][col].is_string()) bad("matrix entries must be polynomial strings");
        m(r, col) = parse_polynomial(rows[r][col].get<std::string>());
      }
    }
    c.maps.push_back(std::move(m));
  }
  check_shapes(c);
  return c;
}

Json to_json(const CurveSpec& spec) {
  return {{"m", spec.m}, {"a", spec.a}, {"b", spec.b}, {"d", spec.d}};
}

Json to_json(const GeneratorSet& g) {
  Json out = Json::object();
  auto labels = g.labels();
  auto all = g.all();
  for (std::size_t k = 0; k < all.size(); ++k) out[labels[k]] = to_string(all[k]);
  return out;
}

Json to_json(const StandardBasisReport& report, const std::vector<std::string>& labels) {
  auto name = [&](std::size_t idx) {
    return idx < labels.size() ? labels[idx] : "T" + std::to_string(idx - labels.size());
  };
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    Json chain = Json::array();
    for (const auto& s : p.trace.steps) {
      chain.push_back({{"reducer", name(s.reducer)},
                       {"reducer_ecart", s.reducer_ecart},
                       {"ecart", s.current_ecart},
                       {"pooled", s.pooled},
                       {"result", to_string(s.after)}});
    }
    pairs.push_back({{"pair", {name(p.i), name(p.j)}},
                     {"spoly", to_string(p.spoly)},
                     {"chain", chain},
                     {"normal_form", to_string(p.trace.result)}});
  }
  return {{"standard_basis", report.verdict}, {"pair_count", report.pairs.size()}, {"pairs", pairs}};
}

Json to_json(const CMCertificate& cert) {
  return {{"order", order_json(cert.order)},
          {"leading_monomials", monomials(cert.leading_monomials)},
          {"is_groebner", cert.is_groebner},
          {"x0_free", cert.x0_free},
          {"conclusion", cert.conclusion},
          {"literal_reading",
           {{"order", order_json(cert.literal_order)},
            {"leading_monomials", monomials(cert.literal_leading_monomials)},
            {"is_groebner", cert.literal_is_groebner},
            {"x0_free", cert.literal_x0_free}}}};
}

Json to_json(const ExactnessReport& report) {
  Json seqs = Json::array();
  for (const auto& s : report.sequences) {
    seqs.push_back({{"map", s.map_index},
                    {"required_length", s.required_length},
                    {"found", s.found},
                    {"sequence", polys(s.sequence)},
                    {"transcript", s.transcript}});
  }
  return {{"ranks", report.ranks},
          {"level_ranks", report.level_ranks},
          {"rank_conditions", report.rank_conditions},
          {"regular_sequences", seqs},
          {"verdict", report.verdict}};
}

Json to_json(const BettiTable& table) { return {{"betti", table.beta}, {"shifts", table.shifts}}; }

}  // namespace tck
