#pragma once

#include <cstdint>
#include <vector>

#include "csa/complex.hpp"

namespace csa {

/// Dense GF(2) matrix with 64-bit packed rows; rank by row reduction.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);
  void set(std::size_t r, std::size_t c);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const;

  /// True iff the product of this (rows x cols) with `next`
  /// (next.rows == cols) is the zero matrix; used to check that
  /// consecutive boundary operators compose to zero.
  bool composes_to_zero_with(const Gf2Matrix& next) const;

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

/// Boundary operator from k-simplexes to (k-1)-simplexes over GF(2);
/// one row per k-simplex, one column per face. Degree 0 maps vertices
/// to the augmentation (a single column of ones), so Betti numbers
/// computed from these matrices are reduced.
struct ChainComplex {
  std::vector<std::vector<Simplex>> simplexes;  // by dimension
  std::vector<Gf2Matrix> boundary;              // boundary[k]: dim k -> dim k-1
  static ChainComplex of(const Complex& c);
};

/// Reduced Betti numbers b0..bd over GF(2). Throws InputError on an
/// empty complex.
std::vector<long> betti_gf2(const Complex& c);

/// k = -1 means nonempty; otherwise the reduced Betti numbers up to
/// degree k must vanish. k <= -2 is vacuously true.
bool is_homologically_k_connected(const Complex& c, int k);

struct LinkConnectivityEntry {
  Simplex simplex;
  int required = 0;  // connectivity degree the link must reach
  std::vector<long> betti;
  bool pass = true;
  bool proxy_only = false;  // required >= 1: homology cannot certify homotopy
};

struct ConnectivityReport {
  std::vector<long> betti;     // whole-complex reduced Betti numbers
  int homologically_k_connected = -2;  // largest k with b0..bk all zero
  bool pass = true;
  std::vector<LinkConnectivityEntry> links;
};

/// Checks that the link of every simplex of a pure n-complex is
/// homologically (n - dim - 2)-connected. Throws InputError on a
/// non-pure complex.
ConnectivityReport check_link_connected(const Complex& c);

}  // namespace csa
