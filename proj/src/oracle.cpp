#include "swapalg/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "swapalg/error.hpp"

namespace swapalg {

namespace {

constexpr int kDenseLimit = 8;
constexpr int kHardCap = 20;

int initial_degree_cap() {
  if (const char* env = std::getenv("SWAPALG_DEGREE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kHardCap) return static_cast<int>(v);
  }
  return 12;
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{initial_degree_cap()};
  return cap;
}

void check_cap(int n) {
  if (n > degree_cap())
    fail(Errc::degree_cap, "degree " + std::to_string(n) + " exceeds the oracle degree cap " +
                               std::to_string(degree_cap()));
}

std::uint64_t key(std::uint64_t row, std::uint64_t col) { return (row << 32) | col; }

void check_uniform_degree(const std::vector<Permutation>& perms) {
  for (const auto& g : perms)
    if (g.degree() != perms.front().degree())
      fail(Errc::degree_mismatch, "gram_rank needs permutations of one degree");
}

// Integer scaling of an element: returns coefficients times the lcm of
// their denominators.
std::vector<std::pair<Permutation, mpz_class>> integer_terms(const AlgebraElement& x) {
  mpz_class l = 1;
  for (const auto& [g, c] : x.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::pair<Permutation, mpz_class>> out;
  out.reserve(x.size());
  for (const auto& [g, c] : x.terms()) out.emplace_back(g, c.get_num() * (l / c.get_den()));
  return out;
}

// --- modular elimination -----------------------------------------------

using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Primes below 2^30: sixteen products of residues fit in a u64 accumulator.
constexpr u64 kPrimes[] = {1073741789ull, 1073741783ull};
constexpr std::size_t kBlock = 16;

u64 mul_mod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

template <u64 p>
u64 dot_mod(const u32* a, const u32* b, std::size_t len) {
  u64 total = 0;
  std::size_t i = 0;
  for (; i + kBlock <= len; i += kBlock) {
    u64 acc = 0;
    for (std::size_t j = 0; j < kBlock; ++j) acc += static_cast<u64>(a[i + j]) * b[i + j];
    total = (total + acc % p) % p;
  }
  u64 acc = 0;
  for (; i < len; ++i) acc += static_cast<u64>(a[i]) * b[i];
  return (total + acc % p) % p;
}

// Incremental symmetric elimination of the Gram matrix modulo p. Each
// candidate is reduced against the current pivots; a nonzero Schur
// complement makes it a new pivot. Returns the rank modulo p, which is a
// lower bound for the rank over Q.
template <u64 p>
std::uint64_t modular_gram_rank(const std::vector<Permutation>& perms) {
  const int n = perms.front().degree();
  std::vector<u32> pow2(n + 1);
  for (int k = 0; k <= n; ++k) pow2[k] = static_cast<u32>((u64{1} << k) % p);

  std::vector<Permutation> pivots;
  std::vector<std::vector<u32>> lower;  // lower[k][i] = L(k,i) for i < k
  std::vector<u64> diag_inverse;
  std::vector<u32> reduced;

  for (const auto& g : perms) {
    const std::size_t r = pivots.size();
    reduced.resize(r);
    const Permutation g_inverse = inverse(g);
    // Forward substitution: reduced = L^-1 column.
    for (std::size_t k = 0; k < r; ++k) {
      const u64 column = pow2[cycle_count(compose(pivots[k], g_inverse))];
      reduced[k] = static_cast<u32>((column + p - dot_mod<p>(lower[k].data(), reduced.data(), k)) % p);
    }
    // Schur complement s = G(g,g) - sum reduced_k^2 / d_k.
    std::vector<u32> new_row(r);
    for (std::size_t k = 0; k < r; ++k) new_row[k] = static_cast<u32>(mul_mod(reduced[k], diag_inverse[k], p));
    const u64 s = (pow2[n] + p - dot_mod<p>(new_row.data(), reduced.data(), r)) % p;
    if (s == 0) continue;
    pivots.push_back(g);
    lower.push_back(std::move(new_row));
    diag_inverse.push_back(inv_mod(s, p));
  }
  return pivots.size();
}

std::vector<mpz_class> integer_gram(const std::vector<Permutation>& perms) {
  const std::size_t m = perms.size();
  std::vector<Permutation> inverses;
  inverses.reserve(m);
  for (const auto& g : perms) inverses.push_back(inverse(g));
  std::vector<mpz_class> out(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const auto v = trace_of(compose(perms[i], inverses[j]));
      out[i * m + j] = static_cast<unsigned long>(v);
      out[j * m + i] = static_cast<unsigned long>(v);
    }
  return out;
}

}  // namespace

int degree_cap() { return cap_storage().load(); }

void set_degree_cap(int cap) {
  if (cap < 1 || cap > kHardCap)
    fail(Errc::out_of_range, "degree cap must lie in 1.." + std::to_string(kHardCap));
  cap_storage().store(cap);
}

// --- ExactOperator -------------------------------------------------------

ExactOperator::ExactOperator(int n) : n_(n), dense_(n <= kDenseLimit) {
  if (n < 1) fail(Errc::out_of_range, "operator degree must be positive");
  check_cap(n);
  if (dense_) dense_entries_.resize(dimension() * dimension());
}

ExactOperator ExactOperator::identity(int n) {
  ExactOperator op(n);
  for (std::uint64_t k = 0; k < op.dimension(); ++k) op.add_at(k, k, 1);
  return op;
}

Rational ExactOperator::at(std::uint64_t row, std::uint64_t col) const {
  if (dense_) return dense_entries_[row * dimension() + col];
  auto it = sparse_entries_.find(key(row, col));
  return it == sparse_entries_.end() ? Rational(0) : it->second;
}

void ExactOperator::add_at(std::uint64_t row, std::uint64_t col, const Rational& value) {
  if (dense_) {
    dense_entries_[row * dimension() + col] += value;
    return;
  }
  auto [it, inserted] = sparse_entries_.try_emplace(key(row, col), value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) sparse_entries_.erase(it);
  } else if (sgn(value) == 0) {
    sparse_entries_.erase(it);
  }
}

bool ExactOperator::is_zero() const {
  if (dense_) return std::all_of(dense_entries_.begin(), dense_entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
  return sparse_entries_.empty();
}

Rational ExactOperator::trace() const {
  Rational t = 0;
  for (std::uint64_t k = 0; k < dimension(); ++k) t += at(k, k);
  return t;
}

ExactOperator& ExactOperator::operator+=(const ExactOperator& other) {
  if (other.n_ != n_) fail(Errc::degree_mismatch, "operator degree mismatch");
  other.for_each_nonzero([&](std::uint64_t r, std::uint64_t c, const Rational& v) { add_at(r, c, v); });
  return *this;
}

ExactOperator& ExactOperator::operator-=(const ExactOperator& other) {
  if (other.n_ != n_) fail(Errc::degree_mismatch, "operator degree mismatch");
  other.for_each_nonzero([&](std::uint64_t r, std::uint64_t c, const Rational& v) { add_at(r, c, -v); });
  return *this;
}

ExactOperator& ExactOperator::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    *this = ExactOperator(n_);
    return *this;
  }
  for (auto& v : dense_entries_) v *= c;
  for (auto& [k, v] : sparse_entries_) v *= c;
  return *this;
}

bool operator==(const ExactOperator& a, const ExactOperator& b) {
  if (a.n_ != b.n_) return false;
  if (a.dense_) return a.dense_entries_ == b.dense_entries_;
  return a.sparse_entries_ == b.sparse_entries_;
}

ExactOperator operator*(const ExactOperator& a, const ExactOperator& b) {
  if (a.n_ != b.n_) fail(Errc::degree_mismatch, "operator degree mismatch");
  const std::uint64_t dim = a.dimension();
  // Row lists of b keep the product proportional to the number of nonzeros.
  std::vector<std::vector<std::pair<std::uint64_t, Rational>>> b_rows(dim);
  b.for_each_nonzero([&](std::uint64_t r, std::uint64_t c, const Rational& v) { b_rows[r].emplace_back(c, v); });
  ExactOperator out(a.n_);
  a.for_each_nonzero([&](std::uint64_t r, std::uint64_t k, const Rational& v) {
    for (const auto& [c, w] : b_rows[k]) out.add_at(r, c, v * w);
  });
  return out;
}

ExactOperator operator+(ExactOperator a, const ExactOperator& b) { return a += b; }
ExactOperator operator-(ExactOperator a, const ExactOperator& b) { return a -= b; }

std::string ExactOperator::to_dense_text() const {
  std::ostringstream os;
  for (std::uint64_t r = 0; r < dimension(); ++r) {
    for (std::uint64_t c = 0; c < dimension(); ++c) os << (c ? " " : "") << at(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

// --- operator realization -------------------------------------------------

std::uint64_t permute_basis_index(const Permutation& g, std::uint64_t col) {
  const int n = g.degree();
  std::uint64_t row = 0;
  for (int j = 1; j <= n; ++j) {
    const std::uint64_t bit = (col >> (n - j)) & 1u;
    row |= bit << (n - g(j));
  }
  return row;
}

ExactOperator operator_of(const AlgebraElement& x) {
  ExactOperator op(x.degree());
  for (const auto& [g, c] : x.terms())
    for (std::uint64_t col = 0; col < op.dimension(); ++col) op.add_at(permute_basis_index(g, col), col, c);
  return op;
}

ExactOperator operator_of(const Permutation& g) { return operator_of(AlgebraElement(g)); }

bool equal_in_sigma(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree() != y.degree()) fail(Errc::degree_mismatch, "equal_in_sigma needs equal degrees");
  return operator_of(x - y).is_zero();
}

Rational trace_pairing(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree() != y.degree()) fail(Errc::degree_mismatch, "trace pairing needs equal degrees");
  const auto xs = integer_terms(x);
  const auto ys = integer_terms(y);
  mpz_class x_scale = 1, y_scale = 1;
  for (const auto& [g, c] : x.terms()) mpz_lcm(x_scale.get_mpz_t(), x_scale.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [g, c] : y.terms()) mpz_lcm(y_scale.get_mpz_t(), y_scale.get_mpz_t(), c.get_den_mpz_t());
  // Group products by cycle count of g h^-1.
  std::vector<mpz_class> by_cycles(x.degree() + 1);
  std::vector<Permutation> y_inverse;
  y_inverse.reserve(ys.size());
  for (const auto& [h, b] : ys) y_inverse.push_back(inverse(h));
  for (const auto& [g, a] : xs)
    for (std::size_t j = 0; j < ys.size(); ++j)
      mpz_addmul(by_cycles[cycle_count(compose(g, y_inverse[j]))].get_mpz_t(), a.get_mpz_t(),
                 ys[j].second.get_mpz_t());
  mpz_class total = 0;
  for (int c = 0; c <= x.degree(); ++c) total += by_cycles[c] << c;
  Rational out(total, x_scale * y_scale);
  out.canonicalize();
  return out;
}

bool equal_in_sigma_gram(const AlgebraElement& x, const AlgebraElement& y) {
  const auto z = x - y;
  return sgn(trace_pairing(z, z)) == 0;
}

bool equal_as_operators(const AlgebraElement& x, const AlgebraElement& y) {
  return x.degree() <= degree_cap() ? equal_in_sigma(x, y) : equal_in_sigma_gram(x, y);
}

std::uint64_t trace_of(const Permutation& p) { return std::uint64_t{1} << cycle_count(p); }

GramMatrix gram_matrix(const std::vector<Permutation>& perms) {
  check_uniform_degree(perms);
  GramMatrix g;
  g.basis = perms;
  const std::size_t m = perms.size();
  g.entries.resize(m * m);
  std::vector<Permutation> inverses;
  for (const auto& p : perms) inverses.push_back(inverse(p));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g.entries[i * m + j] = trace_of(compose(perms[i], inverses[j]));
  return g;
}

// --- ranks ------------------------------------------------------------------

std::uint64_t bareiss_rank(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
    const mpz_class& piv = a[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      mpz_class factor = a[r * cols + col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class& e = a[r * cols + c];
        e = e * piv - factor * a[rank * cols + c];
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      a[r * cols + col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::uint64_t bareiss_rank_psd(std::vector<mpz_class> a, std::size_t m, bool& psd_consistent) {
  psd_consistent = true;
  const auto original = a;
  mpz_class prev = 1;
  std::size_t k = 0;
  mpz_class t;
  for (; k < m; ++k) {
    std::size_t pivot = k;
    while (pivot < m && a[pivot * m + pivot] == 0) ++pivot;
    if (pivot == m) break;
    if (pivot != k) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[pivot * m + c], a[k * m + c]);
      for (std::size_t r = 0; r < m; ++r) std::swap(a[r * m + pivot], a[r * m + k]);
    }
    const mpz_class piv = a[k * m + k];
    if (piv < 0) psd_consistent = false;
    // Symmetric update of the trailing block, upper triangle then mirror.
    for (std::size_t i = k + 1; i < m; ++i) {
      const mpz_class& aik = a[i * m + k];
      for (std::size_t j = i; j < m; ++j) {
        mpz_class& e = a[i * m + j];
        mpz_mul(e.get_mpz_t(), e.get_mpz_t(), piv.get_mpz_t());
        mpz_mul(t.get_mpz_t(), aik.get_mpz_t(), a[k * m + j].get_mpz_t());
        mpz_sub(e.get_mpz_t(), e.get_mpz_t(), t.get_mpz_t());
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < i; ++j) a[i * m + j] = a[j * m + i];
      a[i * m + k] = 0;
      a[k * m + i] = 0;
    }
    prev = piv;
  }
  // A PSD Schur complement with zero diagonal vanishes identically.
  for (std::size_t i = k; i < m && psd_consistent; ++i)
    for (std::size_t j = k; j < m; ++j)
      if (a[i * m + j] != 0) {
        psd_consistent = false;
        break;
      }
  if (!psd_consistent) return bareiss_rank(original, m, m);
  return k;
}

RankReport gram_rank_report(const std::vector<Permutation>& perms, RankMethod method) {
  RankReport report;
  if (perms.empty()) return report;
  check_uniform_degree(perms);
  if (method == RankMethod::Auto) method = perms.size() <= kBareissLimit ? RankMethod::Bareiss : RankMethod::Modular;
  report.method = method;
  if (method == RankMethod::Bareiss) {
    report.rank = bareiss_rank_psd(integer_gram(perms), perms.size(), report.psd_consistent);
    return report;
  }
  std::uint64_t second = 0;
  std::thread worker([&] { second = modular_gram_rank<kPrimes[1]>(perms); });
  const std::uint64_t first = modular_gram_rank<kPrimes[0]>(perms);
  worker.join();
  report.rank = std::max(first, second);
  return report;
}

std::uint64_t gram_rank(const std::vector<Permutation>& perms, RankMethod method) {
  return gram_rank_report(perms, method).rank;
}

std::uint64_t gram_rank(const std::vector<AlgebraElement>& elements) {
  const std::size_t m = elements.size();
  if (m == 0) return 0;
  std::vector<AlgebraElement> scaled;
  scaled.reserve(m);
  for (const auto& x : elements) {
    if (x.degree() != elements.front().degree())
      fail(Errc::degree_mismatch, "gram_rank needs elements of one degree");
    mpz_class l = 1;
    for (const auto& [g, c] : x.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    scaled.push_back(x * Rational(l));
  }
  std::vector<mpz_class> gram(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const Rational v = trace_pairing(scaled[i], scaled[j]);
      gram[i * m + j] = v.get_num();
      gram[j * m + i] = v.get_num();
    }
  bool psd = true;
  return bareiss_rank_psd(std::move(gram), m, psd);
}

std::uint64_t flattened_operator_rank(const std::vector<Permutation>& perms) {
  if (perms.empty()) return 0;
  check_uniform_degree(perms);
  const int n = perms.front().degree();
  check_cap(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::size_t cols = dim * dim;
  std::vector<mpz_class> rows(perms.size() * cols);
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::uint64_t col = 0; col < dim; ++col) rows[i * cols + permute_basis_index(perms[i], col) * dim + col] = 1;
  return bareiss_rank(std::move(rows), perms.size(), cols);
}

// --- partial trace ----------------------------------------------------------

ExactOperator partial_trace_matrix(const ExactOperator& op, int i) {
  const int n = op.degree();
  if (n < 2) fail(Errc::invalid_argument, "partial trace needs degree >= 2");
  if (i < 1 || i > n) fail(Errc::out_of_range, "partial trace point " + std::to_string(i) + " outside 1.." + std::to_string(n));
  const int shift = n - i;
  const std::uint64_t low_mask = (std::uint64_t{1} << shift) - 1;
  auto drop = [&](std::uint64_t idx) { return ((idx >> (shift + 1)) << shift) | (idx & low_mask); };
  ExactOperator out(n - 1);
  op.for_each_nonzero([&](std::uint64_t r, std::uint64_t c, const Rational& v) {
    if (((r >> shift) & 1u) == ((c >> shift) & 1u)) out.add_at(drop(r), drop(c), v);
  });
  return out;
}

// --- basis expansion --------------------------------------------------------

BasisExpansion basis_expand(const AlgebraElement& x, Basis basis) {
  const int n = x.degree();
  check_cap(n);
  BasisExpansion out;
  out.basis = basis;
  out.degree = n;
  const std::uint64_t dim = std::uint64_t{1} << n;

  auto index_of = [n](std::uint64_t row, std::uint64_t col) {
    std::vector<int> idx(n);
    for (int j = 1; j <= n; ++j) {
      const int r = static_cast<int>((row >> (n - j)) & 1u);
      const int c = static_cast<int>((col >> (n - j)) & 1u);
      idx[j - 1] = 2 * r + c;
    }
    return idx;
  };

  if (basis == Basis::MatrixUnits) {
    // The coefficient on e_{r1 c1}⊗...⊗e_{rn cn} is the operator entry (r, c).
    for (const auto& [g, c] : x.terms())
      for (std::uint64_t col = 0; col < dim; ++col) {
        auto& coef = out.coefficients[index_of(permute_basis_index(g, col), col)];
        coef.re += c;
      }
  } else {
    // tr(P op(g)) = sum_J P(J, g.J); P is monomial with column J xor xmask.
    // Each (g, J) feeds every Pauli string whose X/Y pattern equals J xor g.J.
    for (const auto& [g, c] : x.terms()) {
      std::map<std::vector<int>, std::pair<long, long>> counts;  // (re, im) integer sums
      for (std::uint64_t row = 0; row < dim; ++row) {
        const std::uint64_t col = permute_basis_index(g, row);
        const std::uint64_t flips = row ^ col;
        for (std::uint64_t zmask = 0; zmask < dim; ++zmask) {
          std::vector<int> idx(n);
          long re = 1, im = 0;  // phase as Gaussian integer
          for (int j = 1; j <= n; ++j) {
            const int bit = n - j;
            const bool flip = (flips >> bit) & 1u;
            const bool z = (zmask >> bit) & 1u;
            const int r = static_cast<int>((row >> bit) & 1u);
            long fr = 1, fi = 0;
            if (!flip) {
              idx[j - 1] = z ? 3 : 0;
              if (z && r == 1) fr = -1;
            } else if (!z) {
              idx[j - 1] = 1;
            } else {
              idx[j - 1] = 2;
              fr = 0;
              fi = r == 0 ? -1 : 1;  // sigma_y(0,1) = -i, sigma_y(1,0) = i
            }
            const long nr = re * fr - im * fi;
            const long ni = re * fi + im * fr;
            re = nr;
            im = ni;
          }
          auto& acc = counts[idx];
          acc.first += re;
          acc.second += im;
        }
      }
      const Rational scale = c / Rational(mpz_class(1) << n);
      for (const auto& [idx, v] : counts) {
        auto& coef = out.coefficients[idx];
        coef.re += scale * v.first;
        coef.im += scale * v.second;
      }
    }
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::pair<ExactOperator, ExactOperator> reconstruct(const BasisExpansion& e) {
  const int n = e.degree;
  ExactOperator re(n), im(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (const auto& [idx, coef] : e.coefficients) {
    if (e.basis == Basis::MatrixUnits) {
      std::uint64_t row = 0, col = 0;
      for (int j = 1; j <= n; ++j) {
        row |= static_cast<std::uint64_t>(idx[j - 1] / 2) << (n - j);
        col |= static_cast<std::uint64_t>(idx[j - 1] % 2) << (n - j);
      }
      re.add_at(row, col, coef.re);
      im.add_at(row, col, coef.im);
      continue;
    }
    // Kronecker product of Pauli matrices, entry by entry.
    for (std::uint64_t row = 0; row < dim; ++row) {
      std::uint64_t col = 0;
      long pr = 1, pi = 0;
      for (int j = 1; j <= n; ++j) {
        const int bit = n - j;
        const int r = static_cast<int>((row >> bit) & 1u);
        int c = r;
        long fr = 1, fi = 0;
        switch (idx[j - 1]) {
          case 0: break;
          case 1: c = 1 - r; break;
          case 2:
            c = 1 - r;
            fr = 0;
            fi = r == 0 ? -1 : 1;
            break;
          case 3:
            if (r == 1) fr = -1;
            break;
          default: fail(Errc::invalid_argument, "Pauli index outside 0..3");
        }
        col |= static_cast<std::uint64_t>(c) << bit;
        const long nr = pr * fr - pi * fi;
        const long ni = pr * fi + pi * fr;
        pr = nr;
        pi = ni;
      }
      // (coef.re + i coef.im)(pr + i pi)
      re.add_at(row, col, coef.re * pr - coef.im * pi);
      im.add_at(row, col, coef.re * pi + coef.im * pr);
    }
  }
  return {std::move(re), std::move(im)};
}

std::string basis_label(Basis basis, int index) {
  if (basis == Basis::Pauli) {
    static const char* names[] = {"I", "X", "Y", "Z"};
    return names[index & 3];
  }
  return "e" + std::to_string(index / 2 + 1) + std::to_string(index % 2 + 1);
}

}  // namespace swapalg
