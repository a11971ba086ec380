#pragma once

#include <string>
#include <vector>

#include "jordan/matrix.hpp"
#include "jordan/poly.hpp"

namespace jordan::testutil {

inline Scalar sc(const std::string& s) { return Scalar::parse(s); }

inline Poly poly(const std::vector<std::string>& coeffs_low_first) {
  std::vector<Scalar> c;
  for (const auto& s : coeffs_low_first) c.push_back(sc(s));
  return Poly(std::move(c));
}

inline SquareMatrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> r;
  for (const auto& row : rows) {
    std::vector<Scalar> out;
    for (const auto& s : row) out.push_back(sc(s));
    r.push_back(std::move(out));
  }
  return SquareMatrix::from_rows(r);
}

// the running example operator
inline SquareMatrix example_operator() {
  return mat({{"1", "1", "0", "0"},
              {"-1", "1", "0", "0"},
              {"0", "0", "2", "1"},
              {"0", "0", "0", "2"}});
}

// its minimal polynomial (x^2-2x+2)(x-2)^2, expanded
inline Poly example_min_poly() { return poly({"8", "-16", "14", "-6", "1"}); }

}  // namespace jordan::testutil
