// Closed forms printed with the method: a, alpha (general and m = n = 0) and
// eta. Each is stored as a table of monomials in
// (m, n, p, q, r, b, c, d, alpha, xi) with rational coefficients.

#include <array>
#include <cstddef>
#include <vector>

#include "quintic/tschirnhaus.hpp"

namespace quintic::printed {

namespace {

struct Monomial {
  long num;
  long den;
  std::array<unsigned char, 10> e;
};

const Monomial kPrintedA[] = {
  {4, 5, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {3, 5, {0, 0, 1, 0, 0, 0, 0, 1, 0, 0}},
  {2, 5, {0, 1, 0, 0, 0, 0, 1, 0, 0, 0}},
  {-2, 5, {0, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {1, 5, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
  {-4, 5, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-3, 5, {1, 1, 0, 0, 0, 0, 0, 1, 0, 0}},
  {-1, 5, {2, 0, 0, 0, 0, 0, 1, 0, 0, 0}},
  {4, 5, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {1, 5, {3, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
  {-1, 5, {4, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
};

const Monomial kPrintedAlphaLinear[] = {
  {20, 1, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {15, 1, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-10, 1, {0, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-17, 1, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-13, 1, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {17, 1, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {4, 1, {3, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-4, 1, {4, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
};

const Monomial kPrintedAlphaDisc[] = {
  {400, 1, {0, 0, 0, 2, 0, 0, 0, 0, 0, 0}},
  {600, 1, {0, 0, 1, 1, 0, 0, 0, 0, 0, 0}},
  {225, 1, {0, 0, 2, 0, 0, 0, 0, 0, 0, 0}},
  {-500, 1, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0}},
  {-200, 1, {0, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
  {60, 1, {0, 1, 2, 0, 0, 0, 0, 0, 0, 0}},
  {-100, 1, {0, 2, 0, 1, 0, 0, 0, 0, 0, 0}},
  {80, 1, {0, 2, 1, 0, 0, 0, 0, 0, 0, 0}},
  {60, 1, {0, 3, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-680, 1, {1, 0, 1, 1, 0, 0, 0, 0, 0, 0}},
  {-510, 1, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0}},
  {300, 1, {1, 1, 0, 0, 1, 0, 0, 0, 0, 0}},
  {-20, 1, {1, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
  {-190, 1, {1, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-80, 1, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-120, 1, {1, 3, 0, 0, 0, 0, 0, 0, 0, 0}},
  {200, 1, {2, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
  {80, 1, {2, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {265, 1, {2, 0, 2, 0, 0, 0, 0, 0, 0, 0}},
  {260, 1, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
  {360, 1, {2, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-15, 1, {2, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {60, 1, {2, 3, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-120, 1, {3, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
  {-40, 1, {3, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {40, 1, {3, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-170, 1, {3, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
  {30, 1, {3, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-40, 1, {4, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {-80, 1, {4, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-15, 1, {4, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {40, 1, {5, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
};

const Monomial kPrintedAlphaMn0Num[] = {
  {-5, 1, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
  {-2, 1, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {3, 5, {0, 0, 2, 0, 0, 0, 0, 0, 0, 0}},
};

const Monomial kPrintedAlphaMn0Den[] = {
  {4, 1, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {3, 1, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
};

const Monomial kPrintedEtaNum[] = {
  {25, 1, {0, 0, 0, 0, 1, 0, 0, 0, 1, 0}},
  {20, 1, {0, 0, 0, 1, 0, 0, 0, 0, 0, 1}},
  {15, 1, {0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
  {-23, 1, {0, 0, 1, 1, 0, 0, 0, 0, 0, 0}},
  {-15, 1, {0, 0, 2, 0, 0, 0, 0, 0, 0, 0}},
  {10, 1, {0, 1, 0, 0, 0, 0, 0, 0, 1, 1}},
  {-35, 1, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0}},
  {-22, 1, {0, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
  {-25, 1, {0, 1, 1, 0, 0, 0, 0, 0, 1, 0}},
  {-10, 1, {0, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
  {29, 1, {0, 2, 1, 0, 0, 0, 0, 0, 0, 0}},
  {6, 1, {0, 3, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-30, 1, {1, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
  {-21, 1, {1, 0, 0, 1, 0, 0, 0, 0, 1, 0}},
  {-17, 1, {1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
  {23, 1, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0}},
  {-13, 1, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
  {58, 1, {1, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
  {52, 1, {1, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
  {23, 1, {1, 2, 0, 0, 0, 0, 0, 0, 1, 0}},
  {-29, 1, {1, 3, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-4, 1, {2, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
  {35, 1, {2, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
  {26, 1, {2, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {21, 1, {2, 0, 1, 0, 0, 0, 0, 0, 1, 0}},
  {17, 1, {2, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
  {-81, 1, {2, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-35, 1, {2, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {4, 1, {3, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
  {-31, 1, {3, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {-26, 1, {3, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-21, 1, {3, 1, 0, 0, 0, 0, 0, 0, 1, 0}},
  {56, 1, {3, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-4, 1, {4, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
  {28, 1, {4, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {24, 1, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {4, 1, {5, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
  {-28, 1, {5, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-4, 1, {6, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
  {4, 1, {7, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
};

const Monomial kPrintedEtaDen[] = {
  {-25, 1, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
  {-20, 1, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {-15, 1, {0, 0, 1, 0, 0, 0, 0, 0, 1, 0}},
  {19, 1, {0, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
  {6, 1, {0, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {25, 1, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {20, 1, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {13, 1, {1, 1, 0, 0, 0, 0, 0, 0, 1, 0}},
  {-19, 1, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-22, 1, {2, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
  {-16, 1, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-4, 1, {3, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
  {20, 1, {3, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {4, 1, {4, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
  {-4, 1, {5, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
};


template <std::size_t N>
Complex evaluate(const Monomial (&table)[N], const std::array<const Complex*, 10>& vars,
                 const PrecisionCtx& ctx) {
  const mpfr_prec_t p = ctx.bits();
  // powers[v][k] = vars[v]^k, built lazily up to the largest exponent used.
  std::array<std::vector<Complex>, 10> powers;
  Complex sum(p);
  for (const Monomial& mono : table) {
    Complex term(mono.num, 0, p);
    for (std::size_t v = 0; v < 10; ++v) {
      const unsigned k = mono.e[v];
      if (k == 0) continue;
      if (vars[v] == nullptr) {
        term = Complex(p);
        break;
      }
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(Complex(1, 0, p));
      while (pw.size() <= k) pw.push_back(pw.back() * *vars[v]);
      term = term * pw[k];
    }
    if (mono.den != 1) term /= mono.den;
    sum += term;
  }
  return sum;
}

std::array<const Complex*, 10> vars_of(const MonicQuintic& f) {
  return {&f.m, &f.n, &f.p, &f.q, &f.r, nullptr, nullptr, nullptr, nullptr, nullptr};
}

}  // namespace

Complex a(const MonicQuintic& f, const Complex& b, const Complex& c, const Complex& d,
          const PrecisionCtx& ctx) {
  auto vars = vars_of(f);
  vars[5] = &b;
  vars[6] = &c;
  vars[7] = &d;
  return evaluate(kPrintedA, vars, ctx);
}

Complex alpha(const MonicQuintic& f, const PrecisionCtx& ctx) {
  const auto vars = vars_of(f);
  Complex den = f.m * f.m * 2 - f.n * 5;
  if (den.is_zero())
    throw SolverError(ErrorCode::DegenerateLeading, "printed.alpha", "2m^2 - 5n vanishes");
  Complex num = evaluate(kPrintedAlphaLinear, vars, ctx) +
                sqrt_principal(evaluate(kPrintedAlphaDisc, vars, ctx), ctx);
  return num / (den * 2);
}

Complex alpha_m_n_zero(const MonicQuintic& f, const PrecisionCtx& ctx) {
  const auto vars = vars_of(f);
  return evaluate(kPrintedAlphaMn0Num, vars, ctx) / evaluate(kPrintedAlphaMn0Den, vars, ctx);
}

Complex eta(const MonicQuintic& f, const Complex& alpha, const Complex& xi,
            const PrecisionCtx& ctx) {
  auto vars = vars_of(f);
  vars[8] = &alpha;
  vars[9] = &xi;
  return evaluate(kPrintedEtaNum, vars, ctx) / evaluate(kPrintedEtaDen, vars, ctx);
}

}  // namespace quintic::printed
