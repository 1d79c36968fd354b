// Hybrid-padding plan parameters and roots-of-unity tables shared by all
// padded-FFT kernels.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hconv {

using Complex = std::complex<double>;

inline size_t ceilquotient(size_t a, size_t b) { return (a + b - 1) / b; }

// Input symmetry of the data being transformed.
enum class Symmetry { Complex, Centered, Hermitian };

// Kernel family selected by the chunk count p.
enum class Regime { P1, P2, Inner };

struct TransformKind {
  Symmetry symmetry = Symmetry::Complex;
  Regime regime = Regime::P1;
};

const char* name(Symmetry s);
Symmetry symmetryFromName(const std::string& s);

// Parameters of one padded-FFT direction. L values are explicitly stored,
// the transform behaves as if the data were padded with zeros to length qm.
//
//   complex:            p = ceil(L/m), q = ceil(M/m) for p <= 2,
//                       n = ceil(M/(pm)), q = np otherwise
//   centered/Hermitian: p = 2*ceil(L/(2m)), n = ceil(2M/(pm)), q = np/2
//
// n counts residue blocks (n = q when p <= 2); a block holds m values for
// p <= 2 and pm (complex) or (p/2)m (centered/Hermitian) values otherwise.
struct PlanParams {
  size_t L = 1;  // input data length
  size_t M = 1;  // minimum dealiased length, M >= L
  size_t m = 1;  // subtransform size
  size_t p = 1;  // input chunk count
  size_t q = 1;  // total chunk count after padding
  size_t n = 1;  // residue block count
  size_t D = 1;  // residue blocks processed per pass
  size_t C = 1;  // simultaneous copies of the transform
  size_t S = 1;  // stride between successive elements of one copy
  bool inplace = false;
  TransformKind kind;

  // Values per residue block for one copy (complex words, or real words for
  // Hermitian blocks).
  size_t blockLength() const;
  size_t residueBlocks() const { return n; }
  size_t paddedLength() const { return q * m; }
  // Explicit storage per copy: pm for complex, pm/2 for centered (the stored
  // window is L), Hermitian stores ceil(L/2)+1 complex words.
  size_t storedLength() const;

  bool operator==(const PlanParams&) const = default;
};

// Computes (p, q, n) from (L, M, m) for the given symmetry and validates the
// result. The regime follows from p. Throws std::invalid_argument on
// L == 0, m == 0, or M < L.
PlanParams deriveParams(size_t L, size_t M, size_t m, Symmetry symmetry);

// zeta_N^k = exp(2 pi i k / N); negative k reduced mod N. Throws on N == 0.
Complex root(size_t N, int64_t k);

// Work-memory estimate of a d-dimensional convolution using this plan per
// axis: the implicit requirement (A+B)*p*m*L^(d-1) in complex words and the
// explicit-padding buffer max(A,B)*(q/p)^d*L^d for comparison.
struct WorkEstimate {
  uint64_t implicitWords;
  double explicitWords;
};
WorkEstimate workMemoryWords(const PlanParams& params, size_t A, size_t B,
                             size_t d, size_t L);

// Flat unfactorized table of the N primitive roots zeta_N^k, k in [0, N).
// Immutable after construction; safe to share across readers.
class RootTable {
public:
  RootTable() = default;
  explicit RootTable(size_t modulus);

  size_t modulus() const { return N_; }

  // zeta_N^k for any integer k (reduced mod N).
  Complex operator()(int64_t k) const {
    int64_t r = k % static_cast<int64_t>(N_);
    if (r < 0) r += static_cast<int64_t>(N_);
    return z_[static_cast<size_t>(r)];
  }

  // zeta_N^(a*b) with the product reduced mod N before indexing.
  Complex at(uint64_t a, uint64_t b) const {
    return z_[(a % N_) * (b % N_) % N_];
  }

private:
  size_t N_ = 0;
  std::vector<Complex> z_;
};

}  // namespace hconv
