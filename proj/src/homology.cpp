#include "csa/homology.hpp"

#include <algorithm>
#include <map>

#include "csa/errors.hpp"

namespace csa {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c) {
  bits_[r * words_ + c / 64] |= (1ull << (c % 64));
}

std::size_t Gf2Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint64_t> work(bits_);
  std::vector<std::size_t> pivot_rows;  // rows already used as pivots
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* row = &work[r * words_];
    // reduce against existing pivots
    for (std::size_t p = 0; p < rank; ++p) {
      const std::size_t c = pivot_cols[p];
      if (row[c / 64] & (1ull << (c % 64))) {
        const std::uint64_t* prow = &work[pivot_rows[p] * words_];
        for (std::size_t w = 0; w < words_; ++w) row[w] ^= prow[w];
      }
    }
    // find the leading bit, if any
    for (std::size_t w = 0; w < words_; ++w) {
      if (row[w] == 0) continue;
      const std::size_t c = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
      pivot_rows.push_back(r);
      pivot_cols.push_back(c);
      ++rank;
      break;
    }
  }
  return rank;
}

bool Gf2Matrix::composes_to_zero_with(const Gf2Matrix& next) const {
  // (this ∘ next)(e_j) = this^T applied to next's row j; equivalently,
  // for every row j of `next`, the XOR of the rows of `this` selected by
  // that row's bits must vanish.
  if (next.cols_ != rows_) throw InputError("boundary composition shape mismatch");
  for (std::size_t j = 0; j < next.rows_; ++j) {
    std::vector<std::uint64_t> acc(words_, 0);
    const std::uint64_t* sel = &next.bits_[j * next.words_];
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sel[r / 64] & (1ull << (r % 64)))
        for (std::size_t w = 0; w < words_; ++w) acc[w] ^= bits_[r * words_ + w];
    }
    for (std::uint64_t word : acc)
      if (word != 0) return false;
  }
  return true;
}

ChainComplex ChainComplex::of(const Complex& c) {
  ChainComplex cc;
  const int d = c.dimension();
  if (d < 0) return cc;
  cc.simplexes.resize(static_cast<std::size_t>(d) + 1);
  std::vector<std::map<Simplex, std::size_t>> index(static_cast<std::size_t>(d) + 1);
  for (const auto& s : c.all_simplexes()) {
    auto& level = cc.simplexes[static_cast<std::size_t>(dim(s))];
    index[static_cast<std::size_t>(dim(s))].emplace(s, level.size());
    level.push_back(s);
  }
  // degree 0: augmentation column of ones
  Gf2Matrix aug(cc.simplexes[0].size(), 1);
  for (std::size_t r = 0; r < cc.simplexes[0].size(); ++r) aug.set(r, 0);
  cc.boundary.push_back(std::move(aug));
  for (int k = 1; k <= d; ++k) {
    const auto& level = cc.simplexes[static_cast<std::size_t>(k)];
    const auto& faces = index[static_cast<std::size_t>(k - 1)];
    Gf2Matrix m(level.size(), cc.simplexes[static_cast<std::size_t>(k - 1)].size());
    for (std::size_t r = 0; r < level.size(); ++r) {
      const Simplex& s = level[r];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(i));
        m.set(r, faces.at(face));
      }
    }
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

std::vector<long> betti_gf2(const Complex& c) {
  if (c.empty()) throw InputError("betti_gf2: empty complex");
  const ChainComplex cc = ChainComplex::of(c);
  const int d = c.dimension();
  std::vector<std::size_t> ranks;
  ranks.reserve(cc.boundary.size());
  for (const auto& m : cc.boundary) ranks.push_back(m.rank());
  std::vector<long> betti(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    const long nk = static_cast<long>(cc.simplexes[static_cast<std::size_t>(k)].size());
    const long rk = static_cast<long>(ranks[static_cast<std::size_t>(k)]);
    const long rk1 = (k + 1 <= d) ? static_cast<long>(ranks[static_cast<std::size_t>(k) + 1]) : 0;
    betti[static_cast<std::size_t>(k)] = nk - rk - rk1;
  }
  return betti;
}

bool is_homologically_k_connected(const Complex& c, int k) {
  if (k <= -2) return true;
  if (c.empty()) return false;
  if (k == -1) return true;
  const auto betti = betti_gf2(c);
  for (int i = 0; i <= k; ++i) {
    if (i < static_cast<int>(betti.size()) && betti[static_cast<std::size_t>(i)] != 0)
      return false;
  }
  return true;
}

ConnectivityReport check_link_connected(const Complex& c) {
  if (!c.is_pure()) throw InputError("check_link_connected: complex is not pure");
  ConnectivityReport report;
  if (c.empty()) return report;
  report.betti = betti_gf2(c);
  report.homologically_k_connected = -1;
  for (std::size_t i = 0; i < report.betti.size(); ++i) {
    if (report.betti[i] != 0) break;
    report.homologically_k_connected = static_cast<int>(i);
  }
  const int n = c.dimension();
  for (const auto& s : c.all_simplexes()) {
    LinkConnectivityEntry entry;
    entry.simplex = s;
    entry.required = n - dim(s) - 2;
    entry.proxy_only = entry.required >= 1;
    if (entry.required >= -1) {
      const Complex lk = c.link(s);
      if (!lk.empty() && entry.required >= 0) entry.betti = betti_gf2(lk);
      entry.pass = is_homologically_k_connected(lk, entry.required);
    }
    if (!entry.pass) report.pass = false;
    report.links.push_back(std::move(entry));
  }
  return report;
}

}  // namespace csa
