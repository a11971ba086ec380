#include "jordan/json_io.hpp"

namespace jordan {

Json matrix_to_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.dim()}, {"entries", std::move(rows)}};
}

SquareMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    fail(ErrorKind::ParseError, "matrix JSON needs {\"n\", \"entries\"}");
  int n = 0;
  try {
    n = j.at("n").get<int>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::ParseError, "matrix \"n\" must be an integer");
  }
  if (n < 1) fail(ErrorKind::ParseError, "matrix dimension must be >= 1");
  const auto& entries = j.at("entries");
  if (!entries.is_array() || int(entries.size()) != n)
    fail(ErrorKind::ParseError, "matrix \"entries\" must be an n x n array");
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = entries.at(i);
    if (!row.is_array() || int(row.size()) != n)
      fail(ErrorKind::ParseError, "matrix \"entries\" must be an n x n array");
    for (int jj = 0; jj < n; ++jj) {
      const auto& cell = row.at(jj);
      Scalar v;
      if (cell.is_string())
        v = Scalar::parse(cell.get<std::string>());
      else if (cell.is_number_integer())
        v = Scalar(cell.get<long>());
      else
        fail(ErrorKind::ParseError, "matrix entries must be strings or integers");
      if (!v.is_rational())
        fail(ErrorKind::ParseError, "input matrices must have rational entries");
      m.at(i, jj) = v;
    }
  }
  return m;
}

Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return Json{{"ring", ring_name(p.ring())}, {"coefficients", std::move(coeffs)}};
}

Json spectral_to_json(const SpectralData& s) {
  Json pairs = Json::array();
  for (const auto& p : s.pairs)
    pairs.push_back(Json{{"lambda", p.lambda.str()},
                         {"multiplicity", p.mult},
                         {"re", p.re.str()},
                         {"im", p.im.str()},
                         {"modulus_sq", p.modulus_sq.str()}});
  Json reals = Json::array();
  for (const auto& r : s.reals)
    reals.push_back(Json{{"lambda", r.lambda.str()},
                         {"multiplicity", r.mult},
                         {"modulus_sq", r.modulus_sq.str()}});
  Json out{{"mode", mode_name(s.mode)},
           {"complex_pairs", std::move(pairs)},
           {"real_roots", std::move(reals)},
           {"minimal_polynomial", poly_to_json(s.p_min)}};
  if (s.mode == Mode::Numeric) out["precision_bits"] = 53;
  return out;
}

Json projectors_to_json(const ProjectorSet& ps, const VerificationReport& identities) {
  Json pairs = Json::array();
  for (size_t k = 0; k < ps.pair_projectors.size(); ++k)
    pairs.push_back(Json{{"lambda", ps.source.pairs[k].lambda.str()},
                         {"projector", poly_to_json(ps.pair_projectors[k])}});
  Json reals = Json::array();
  for (size_t k = 0; k < ps.real_projectors.size(); ++k)
    reals.push_back(Json{{"lambda", ps.source.reals[k].lambda.str()},
                         {"projector", poly_to_json(ps.real_projectors[k])}});
  return Json{{"complex_pairs", std::move(pairs)},
              {"real_roots", std::move(reals)},
              {"identities", verification_to_json(identities)}};
}

Json verification_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  return Json{{"passed", r.all_pass()}, {"checks", std::move(checks)}};
}

Json classification_to_json(const ClassificationReport& c) {
  return Json{{"semisimple", c.semisimple},
              {"nilpotent", c.nilpotent},
              {"elliptic_additive", c.elliptic_add},
              {"hyperbolic_additive", c.hyperbolic_add},
              {"elliptic_multiplicative", c.elliptic_mult},
              {"hyperbolic_multiplicative", c.hyperbolic_mult},
              {"unipotent", c.unipotent},
              {"mode", mode_name(c.mode)},
              {"spectrum", spectral_to_json(c.spectrum)}};
}

Json additive_to_json(const AdditiveDecomposition& d) {
  return Json{{"elliptic", matrix_to_json(d.elliptic)},
              {"hyperbolic", matrix_to_json(d.hyperbolic)},
              {"nilpotent", matrix_to_json(d.nilpotent)},
              {"witness_elliptic", poly_to_json(d.witness_elliptic)},
              {"witness_hyperbolic", poly_to_json(d.witness_hyperbolic)},
              {"witness_nilpotent", poly_to_json(d.witness_nilpotent)},
              {"spectrum", spectral_to_json(d.source)}};
}

Json multiplicative_to_json(const MultiplicativeDecomposition& d) {
  Json log_terms = Json::array();
  for (const auto& t : d.log_hyperbolic.terms)
    log_terms.push_back(
        Json{{"modulus_sq", t.modulus_sq.str()}, {"projector", matrix_to_json(t.projector)}});
  return Json{{"elliptic", matrix_to_json(d.elliptic)},
              {"hyperbolic", matrix_to_json(d.hyperbolic)},
              {"unipotent", matrix_to_json(d.unipotent)},
              {"witness_elliptic", poly_to_json(d.witness_elliptic)},
              {"witness_hyperbolic", poly_to_json(d.witness_hyperbolic)},
              {"witness_unipotent", poly_to_json(d.witness_unipotent)},
              {"log_hyperbolic", Json{{"terms", std::move(log_terms)}}},
              {"numeric_fallback", d.numeric_fallback},
              {"spectrum", spectral_to_json(d.source)}};
}

LieStructure lie_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family"))
    fail(ErrorKind::ParseError, "lie JSON needs a \"family\"");
  std::string family = j.at("family").get<std::string>();
  try {
    if (family == "sl") return LieStructure::sl(j.at("n").get<int>());
    if (family == "sp") return LieStructure::sp(j.at("n").get<int>());
    if (family == "so") {
      if (j.contains("p")) return LieStructure::so(j.at("p").get<int>(), j.at("q").get<int>());
      return LieStructure::so(j.at("n").get<int>(), 0);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad lie spec: ") + e.what());
  }
  fail(ErrorKind::ParseError, "unknown family \"" + family + "\" (expected sl, so, sp)");
}

Json lie_to_json(const LieStructure& L) {
  switch (L.family) {
    case LieStructure::Family::SL: return Json{{"family", "sl"}, {"n", L.n}};
    case LieStructure::Family::SO: return Json{{"family", "so"}, {"p", L.p}, {"q", L.q}};
    case LieStructure::Family::SP: return Json{{"family", "sp"}, {"n", L.n}};
  }
  return Json();
}

}  // namespace jordan
