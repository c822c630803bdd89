// Copyright 2026 The qrf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qrf/linalg.hpp"

namespace qrf {

/// Pretty-printing for states and operators.  Amplitude sets within 1e-12
/// of {0, +-1, +-1/2, +-1/sqrt2, +-1/(2 sqrt2), +-1/4} are printed as exact
/// fractions, e.g. "(|01> - |11>)/sqrt(2)"; anything else falls back to 12
/// significant digits.  With `ascii` unset, kets use the unicode glyphs
/// |01⟩ and the square root sign.
namespace render {

constexpr double kMatchTolerance = 1e-12;

inline std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  // Normalize "-0" to "0" so rendered tables are stable.
  if (std::string(buf) == "-0") return "0";
  return buf;
}

inline std::string complex_number(cplx z) {
  if (std::abs(z.imag()) <= kMatchTolerance) return number(z.real());
  if (std::abs(z.real()) <= kMatchTolerance) return number(z.imag()) + "i";
  return "(" + number(z.real()) + (z.imag() >= 0 ? "+" : "") +
         number(z.imag()) + "i)";
}

inline std::string ket(const std::string& label, bool ascii) {
  return ascii ? "|" + label + ">" : "|" + label + "⟩";
}

inline std::string ketbra(const std::string& row, const std::string& col,
                          bool ascii) {
  return ascii ? "|" + row + "><" + col + "|"
               : "|" + row + "⟩⟨" + col + "|";
}

struct ExactMagnitude {
  bool matched;
  std::string divisor;  // "" when the magnitude is 1
};

/// Match |amplitude| against the divisor forms the report prints exactly.
inline ExactMagnitude match_magnitude(double magnitude, bool ascii) {
  const std::string root2 = ascii ? "sqrt(2)" : "√2";
  const struct {
    double value;
    const char* unicode;
    const char* plain;
  } table[] = {
      {1.0, "", ""},
      {0.5, "2", "2"},
      {1.0 / std::numbers::sqrt2, "√2", "sqrt(2)"},
      {0.5 / std::numbers::sqrt2, "(2√2)", "(2*sqrt(2))"},
      {0.25, "4", "4"},
  };
  for (const auto& row : table) {
    if (std::abs(magnitude - row.value) <= kMatchTolerance) {
      return {true, ascii ? row.plain : row.unicode};
    }
  }
  return {false, ""};
}

struct Term {
  double sign;  // +1 / -1
  std::string body;
};

inline std::string join_terms(const std::vector<Term>& terms,
                              const std::string& divisor, bool ascii) {
  // The unicode minus sign matches typeset equations; ASCII mode falls back
  // to the hyphen.
  const std::string minus = ascii ? "-" : "−";
  std::string sum;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].sign < 0) sum += minus;
    } else {
      sum += terms[i].sign < 0 ? " " + minus + " " : " + ";
    }
    sum += terms[i].body;
  }
  if (divisor.empty()) return sum;
  if (terms.size() == 1) return sum + "/" + divisor;
  return "(" + sum + ")/" + divisor;
}

}  // namespace render

/// Render a state vector, e.g. "(|01⟩ − |11⟩)/√2".
inline std::string render_ket(const StateVector& psi, bool ascii = false) {
  const RegisterLayout& layout = psi.layout();
  std::vector<int> support;
  for (int i = 0; i < psi.dim(); ++i) {
    if (std::abs(psi.amp(i)) > render::kMatchTolerance) support.push_back(i);
  }
  if (support.empty()) return "0";

  // Exact form: all amplitudes real with one shared magnitude from the
  // printable set.
  bool exact = true;
  const double magnitude = std::abs(psi.amp(support[0]));
  for (int i : support) {
    const cplx a = psi.amp(i);
    if (std::abs(a.imag()) > render::kMatchTolerance ||
        std::abs(std::abs(a.real()) - magnitude) > render::kMatchTolerance) {
      exact = false;
      break;
    }
  }
  const render::ExactMagnitude form = render::match_magnitude(magnitude, ascii);
  if (exact && form.matched) {
    std::vector<render::Term> terms;
    for (int i : support) {
      terms.push_back({psi.amp(i).real() < 0 ? -1.0 : 1.0,
                       render::ket(layout.label(i), ascii)});
    }
    return render::join_terms(terms, form.divisor, ascii);
  }

  std::string out;
  for (std::size_t t = 0; t < support.size(); ++t) {
    if (t > 0) out += " + ";
    out += render::complex_number(psi.amp(support[t])) + " " +
           render::ket(layout.label(support[t]), ascii);
  }
  return out;
}

/// Render an operator as a sum of |i><j| terms, e.g.
/// "(|01⟩⟨01| + |10⟩⟨10|)/2".
inline std::string render_operator(const Operator& op, bool ascii = false) {
  const RegisterLayout& layout = op.layout();
  std::vector<std::pair<int, int>> support;
  for (int i = 0; i < op.dim(); ++i) {
    for (int j = 0; j < op.dim(); ++j) {
      if (std::abs(op.entry(i, j)) > render::kMatchTolerance) {
        support.push_back({i, j});
      }
    }
  }
  if (support.empty()) return "0";

  bool exact = true;
  const double magnitude = std::abs(op.entry(support[0].first, support[0].second));
  for (const auto& [i, j] : support) {
    const cplx a = op.entry(i, j);
    if (std::abs(a.imag()) > render::kMatchTolerance ||
        std::abs(std::abs(a.real()) - magnitude) > render::kMatchTolerance) {
      exact = false;
      break;
    }
  }
  const render::ExactMagnitude form = render::match_magnitude(magnitude, ascii);
  if (exact && form.matched) {
    std::vector<render::Term> terms;
    for (const auto& [i, j] : support) {
      terms.push_back(
          {op.entry(i, j).real() < 0 ? -1.0 : 1.0,
           render::ketbra(layout.label(i), layout.label(j), ascii)});
    }
    return render::join_terms(terms, form.divisor, ascii);
  }

  std::string out;
  for (std::size_t t = 0; t < support.size(); ++t) {
    const auto& [i, j] = support[t];
    if (t > 0) out += " + ";
    out += render::complex_number(op.entry(i, j)) + " " +
           render::ketbra(layout.label(i), layout.label(j), ascii);
  }
  return out;
}

inline std::string render_density(const DensityOperator& rho,
                                  bool ascii = false) {
  return render_operator(rho.as_operator(), ascii);
}

/// Register display names: A, B, C, ... then R26, R27, ...
inline std::string register_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "R" + std::to_string(index);
}

}  // namespace qrf
