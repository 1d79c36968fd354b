#include "hconv/plan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hconv {

const char* name(Symmetry s) {
  switch (s) {
    case Symmetry::Complex: return "complex";
    case Symmetry::Centered: return "centered";
    case Symmetry::Hermitian: return "hermitian";
  }
  return "?";
}

Symmetry symmetryFromName(const std::string& s) {
  if (s == "complex") return Symmetry::Complex;
  if (s == "centered") return Symmetry::Centered;
  if (s == "hermitian") return Symmetry::Hermitian;
  throw std::invalid_argument("unknown symmetry: " + s);
}

size_t PlanParams::blockLength() const {
  if (kind.regime != Regime::Inner) return m;
  return kind.symmetry == Symmetry::Complex ? p * m : (p / 2) * m;
}

size_t PlanParams::storedLength() const {
  return kind.symmetry == Symmetry::Hermitian ? ceilquotient(L, 2) + 1 : L;
}

PlanParams deriveParams(size_t L, size_t M, size_t m, Symmetry symmetry) {
  if (L == 0) throw std::invalid_argument("deriveParams: L must be positive");
  if (m == 0) throw std::invalid_argument("deriveParams: m must be positive");
  if (M < L) throw std::invalid_argument("deriveParams: M must satisfy M >= L");

  PlanParams pp;
  pp.L = L;
  pp.M = M;
  pp.m = m;
  pp.kind.symmetry = symmetry;

  if (symmetry == Symmetry::Complex) {
    pp.p = ceilquotient(L, m);
    if (pp.p <= 2) {
      pp.n = ceilquotient(M, m);
      pp.q = pp.n;
    } else {
      pp.n = ceilquotient(M, pp.p * m);
      pp.q = pp.n * pp.p;
    }
    pp.kind.regime =
        pp.p == 1 ? Regime::P1 : (pp.p == 2 ? Regime::P2 : Regime::Inner);
  } else {
    pp.p = 2 * ceilquotient(L, 2 * m);  // force even p
    pp.n = ceilquotient(2 * M, pp.p * m);
    pp.q = pp.n * pp.p / 2;
    pp.kind.regime = pp.p == 2 ? Regime::P2 : Regime::Inner;
  }
  return pp;
}

Complex root(size_t N, int64_t k) {
  if (N == 0) throw std::invalid_argument("root: N must be positive");
  int64_t r = k % static_cast<int64_t>(N);
  if (r < 0) r += static_cast<int64_t>(N);
  if (r == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(N));
}

WorkEstimate workMemoryWords(const PlanParams& params, size_t A, size_t B,
                             size_t d, size_t L) {
  if (A == 0 || B == 0)
    throw std::invalid_argument("workMemoryWords: A and B must be positive");
  if (d < 1 || d > 3)
    throw std::invalid_argument("workMemoryWords: d must be 1, 2, or 3");

  uint64_t implicit = static_cast<uint64_t>(A + B) * params.p * params.m;
  for (size_t i = 1; i < d; ++i) implicit *= L;

  double ratio = static_cast<double>(params.q) / static_cast<double>(params.p);
  double expl = static_cast<double>(std::max(A, B));
  for (size_t i = 0; i < d; ++i) expl *= ratio * static_cast<double>(L);
  return {implicit, expl};
}

RootTable::RootTable(size_t modulus) : N_(modulus) {
  if (modulus == 0)
    throw std::invalid_argument("RootTable: modulus must be positive");
  z_.resize(N_);
  z_[0] = {1.0, 0.0};
  double step = 2.0 * std::numbers::pi / static_cast<double>(N_);
  for (size_t k = 1; k < N_; ++k)
    z_[k] = std::polar(1.0, step * static_cast<double>(k));
}

}  // namespace hconv
