// Copyright 2026 The fermat-apn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermat/factor.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <sstream>

#include "fermat/errors.hpp"
#include "fermat/upoly.hpp"
#include "hensel.hpp"

namespace fermat {

namespace {

using detail::Series;
using DegreeSet = std::bitset<257>;

constexpr int kMaxTotalDegree = 256;
constexpr int kPatternPoints = 4;

// ---------------------------------------------------------------------------
// Squarefree splitting and contents

struct Piece {
  BiPoly f;
  int mult;
};

// f = g * (f/g) with g = gcd(f, df); leaves are squarefree. Multiplicities
// of repeated irreducibles are summed by the caller.
void squarefree_split(const BiPoly& f, int mult, std::vector<Piece>& out) {
  if (f.is_constant()) return;
  BiPoly d = f.derivative_x();
  if (d.is_zero()) d = f.derivative_y();
  if (d.is_zero()) {
    squarefree_split(f.sqrt(), 2 * mult, out);
    return;
  }
  const BiPoly g = bi_gcd(f, d);
  if (g.is_constant()) {
    out.push_back({f, mult});
    return;
  }
  auto q = bi_divide_exact(f, g);
  if (!q) throw InvariantViolation("gcd does not divide its argument");
  squarefree_split(g, mult, out);
  squarefree_split(*q, mult, out);
}

// Monic gcd of the rows (a polynomial in y).
Coeffs y_content(const BiPoly& f) {
  Coeffs g;
  for (const auto& r : f.rows) {
    g = upoly::gcd(f.field, g, r);
    if (upoly::deg(g) == 0) break;
  }
  return g;
}

BiPoly poly_in_y(const Field& F, const Coeffs& c) {
  BiPoly b(F);
  b.rows.push_back(c);
  b.trim();
  return b;
}

BiPoly poly_in_x(const Field& F, const Coeffs& c) {
  return poly_in_y(F, c).transpose();
}

// ---------------------------------------------------------------------------
// GF(2) linear algebra for recombination

class Gf2Echelon {
 public:
  explicit Gf2Echelon(int cols) : cols_(cols), words_((cols + 63) / 64) {}

  void add(std::vector<uint64_t> row) {
    for (const auto& [p, r] : rows_)
      if (bit(row, p))
        for (int w = 0; w < words_; ++w) row[w] ^= r[w];
    int p = -1;
    for (int c = 0; c < cols_ && p < 0; ++c)
      if (bit(row, c)) p = c;
    if (p < 0) return;
    for (auto& [q, r] : rows_)
      if (bit(r, p))
        for (int w = 0; w < words_; ++w) r[w] ^= row[w];
    rows_.emplace_back(p, std::move(row));
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  bool full() const { return rank() == cols_; }

  // Basis of the null space, one vector per free column.
  std::vector<std::vector<uint64_t>> kernel() const {
    std::vector<bool> pivot(cols_, false);
    for (const auto& [p, r] : rows_) pivot[p] = true;
    std::vector<std::vector<uint64_t>> out;
    for (int f = 0; f < cols_; ++f) {
      if (pivot[f]) continue;
      std::vector<uint64_t> v(words_, 0);
      set(v, f);
      for (const auto& [p, r] : rows_)
        if (bit(r, f)) set(v, p);
      out.push_back(std::move(v));
    }
    return out;
  }

  std::vector<uint64_t> zero_row() const {
    return std::vector<uint64_t>(words_, 0);
  }
  static bool bit(const std::vector<uint64_t>& v, int c) {
    return (v[c >> 6] >> (c & 63)) & 1;
  }
  static void set(std::vector<uint64_t>& v, int c) {
    v[c >> 6] |= uint64_t{1} << (c & 63);
  }

 private:
  int cols_, words_;
  std::vector<std::pair<int, std::vector<uint64_t>>> rows_;
};

// ---------------------------------------------------------------------------
// Recombination of lifted factors

class Recombiner {
 public:
  Recombiner(const Field& F, BiPoly h, std::vector<Series> lifted, int n,
             const DegreeSet& allowed, uint64_t budget)
      : F_(F),
        h_(std::move(h)),
        lifted_(std::move(lifted)),
        n_(n),
        allowed_(allowed),
        budget_(budget) {}

  std::vector<BiPoly> run() {
    const int r = static_cast<int>(lifted_.size());
    std::vector<std::vector<int>> groups;
    if (r >= 4) {
      groups = kernel_groups();
    } else {
      for (int i = 0; i < r; ++i) groups.push_back({i});
    }
    if (groups.size() > 1 && groups.size() < static_cast<std::size_t>(r)) {
      // Groups are unions of true factors' supports only when the kernel
      // is exact; check them all before trusting.
      std::vector<BiPoly> found;
      BiPoly cur = h_;
      bool all = true;
      for (const auto& g : groups) {
        charge(found.size());
        auto c = candidate(g);
        auto q = c ? bi_divide_exact(cur, *c) : std::nullopt;
        if (!q) {
          all = false;
          break;
        }
        found.push_back(*c);
        cur = *q;
      }
      if (all && cur.is_constant()) return found;
    }
    return search(groups);
  }

 private:
  int degree_of(const std::vector<int>& group) const {
    int d = 0;
    for (int i : group) d += static_cast<int>(lifted_[i][0].size()) - 1;
    return d;
  }

  // Product of the group's lifted factors as a polynomial, or nullopt when
  // it cannot be a factor of total degree equal to its x-degree.
  std::optional<BiPoly> candidate(const std::vector<int>& group) const {
    Series s{Coeffs{1}};
    for (int i : group) s = detail::series_mul(F_, s, lifted_[i], n_);
    const int e = static_cast<int>(s[0].size()) - 1;
    for (std::size_t k = 1; k < s.size(); ++k)
      if (!s[k].empty() &&
          (static_cast<int>(k) > e || upoly::deg(s[k]) > e - static_cast<int>(k)))
        return std::nullopt;
    return detail::from_series(F_, s);
  }

  // Columns with equal kernel signatures must lie in the same factor:
  // each true factor's indicator vector is in the kernel of the
  // log-derivative degree conditions.
  std::vector<std::vector<int>> kernel_groups() const {
    const int r = static_cast<int>(lifted_.size());
    const int D = h_.deg_x();
    const int m = F_.degree();
    // Q_i = prod_{j != i} L_j by prefix and suffix products.
    std::vector<Series> pre(r + 1), suf(r + 1);
    pre[0] = suf[r] = Series{Coeffs{1}};
    for (int i = 0; i < r; ++i)
      pre[i + 1] = detail::series_mul(F_, pre[i], lifted_[i], n_);
    for (int i = r; i-- > 0;)
      suf[i] = detail::series_mul(F_, suf[i + 1], lifted_[i], n_);
    std::vector<Series> mu(r);
    for (int i = 0; i < r; ++i) {
      Series d;
      for (const auto& c : lifted_[i]) d.push_back(upoly::derivative(c));
      const Series q = detail::series_mul(F_, pre[i], suf[i + 1], n_);
      mu[i] = detail::series_mul(F_, q, d, n_);
    }
    Gf2Echelon ech(r);
    for (int l = 1; l < n_ && !ech.full(); ++l) {
      for (int a = std::max(0, D - l); a < D; ++a) {
        for (int b = 0; b < m; ++b) {
          auto row = ech.zero_row();
          bool any = false;
          for (int i = 0; i < r; ++i) {
            if (l >= static_cast<int>(mu[i].size()) ||
                a >= static_cast<int>(mu[i][l].size()))
              continue;
            if ((mu[i][l][a] >> b) & 1) {
              Gf2Echelon::set(row, i);
              any = true;
            }
          }
          if (any) ech.add(std::move(row));
        }
      }
    }
    const auto ker = ech.kernel();
    std::map<std::vector<bool>, std::vector<int>> by_sig;
    for (int i = 0; i < r; ++i) {
      std::vector<bool> sig;
      for (const auto& v : ker) sig.push_back(Gf2Echelon::bit(v, i));
      by_sig[sig].push_back(i);
    }
    std::vector<std::vector<int>> groups;
    for (auto& [sig, g] : by_sig) groups.push_back(g);
    std::sort(groups.begin(), groups.end());
    return groups;
  }

  // One trial division against the budget.
  void charge(std::size_t found) const {
    if (++tries_ <= budget_) return;
    std::ostringstream os;
    os << "recombination budget " << budget_ << " exhausted with "
       << lifted_.size() << " modular factors, " << found << " factors found";
    throw BudgetExceeded(os.str(), budget_, static_cast<int>(lifted_.size()),
                         static_cast<int>(found));
  }

  // Subset search over groups, smallest subsets first.
  std::vector<BiPoly> search(std::vector<std::vector<int>> groups) const {
    std::vector<BiPoly> found;
    BiPoly cur = h_;
    int s = 1;
    while (2 * s <= static_cast<int>(groups.size())) {
      const int g = static_cast<int>(groups.size());
      std::vector<int> idx(s);
      std::iota(idx.begin(), idx.end(), 0);
      bool hit = false;
      while (true) {
        charge(found.size());
        std::vector<int> members;
        for (int i : idx)
          members.insert(members.end(), groups[i].begin(), groups[i].end());
        if (allowed_[degree_of(members)]) {
          if (auto c = candidate(members)) {
            if (auto q = bi_divide_exact(cur, *c)) {
              found.push_back(*c);
              cur = *q;
              for (int k = s; k-- > 0;) groups.erase(groups.begin() + idx[k]);
              hit = true;
              break;
            }
          }
        }
        // next combination
        int k = s - 1;
        while (k >= 0 && idx[k] == g - s + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (!hit) ++s;
    }
    if (!cur.is_constant()) found.push_back(cur);
    return found;
  }

  Field F_;
  BiPoly h_;
  std::vector<Series> lifted_;
  int n_;
  DegreeSet allowed_;
  uint64_t budget_;
  mutable uint64_t tries_ = 0;
};

// ---------------------------------------------------------------------------
// Squarefree primitive bivariate factoring

DegreeSet subset_sums(const std::vector<int>& degs) {
  DegreeSet s;
  s[0] = true;
  for (int d : degs) s |= s << d;
  return s;
}

struct Specialization {
  uint32_t y0;
  std::vector<Coeffs> factors;
};

// Irreducible factors over E of f, which is squarefree, primitive in both
// directions and of positive degree in x and y.
std::vector<BiPoly> factor_primitive(const BiPoly& f, const FactorOptions& opts) {
  const Field& E = f.field;
  const int m = E.degree();
  const int D = f.total_degree();
  int e = 1;
  while (m * e < 32 && (uint64_t{1} << (m * e)) < 2 * static_cast<uint64_t>(D) + 2)
    ++e;
  for (; m * e <= 32; ++e) {
    const Field W = e == 1 ? E : extension_field(E, e);
    const Embedding emb = embed(E, W);
    const BiPoly fw = f.map(emb);
    const Coeffs top = fw.top_form_at_x1();
    const uint64_t limit = std::min<uint64_t>(W.size(), 4 * D + 64);

    // Shear so the x^D coefficient is a nonzero constant, then find
    // specializations that stay squarefree.
    for (uint64_t li = 0; li < std::min<uint64_t>(W.size(), 64); ++li) {
      const uint32_t lambda = static_cast<uint32_t>(li);
      const uint32_t c = upoly::eval(W, top, lambda);
      if (c == 0) continue;
      const BiPoly g = fw.shear(lambda).scale(W.inv(c));
      std::vector<Specialization> specs;
      for (uint64_t yi = 0; yi < limit && specs.size() < kPatternPoints; ++yi) {
        const uint32_t y0 = static_cast<uint32_t>(
            (yi + opts.seed) % W.size());
        const Coeffs u = g.eval_y(y0);
        if (!upoly::is_squarefree(W, u)) continue;
        auto uf = univar_factor({W, u}, opts.seed);
        Specialization sp{y0, {}};
        for (auto& [p, mult] : uf.factors) sp.factors.push_back(p);
        specs.push_back(std::move(sp));
      }
      if (specs.empty()) continue;

      DegreeSet allowed;
      allowed.set();
      for (const auto& sp : specs) {
        std::vector<int> degs;
        for (const auto& p : sp.factors) degs.push_back(upoly::deg(p));
        allowed &= subset_sums(degs);
      }
      if (allowed.count() <= 2) return {f.normalized()};

      const Specialization& best = *std::min_element(
          specs.begin(), specs.end(), [](const auto& a, const auto& b) {
            return a.factors.size() < b.factors.size();
          });
      const BiPoly h = g.shift_y(best.y0);
      const int n = h.deg_y() + 1;
      auto lifted =
          detail::hensel_lift(W, detail::to_series(h), best.factors, n);
      Recombiner rc(W, h, std::move(lifted), n, allowed, opts.budget);
      std::vector<BiPoly> over_w;
      for (const auto& p : rc.run())
        over_w.push_back(p.shift_y(best.y0).shear(lambda).normalized());
      if (e == 1) return over_w;

      // Products over orbits of the relative Frobenius descend to E.
      std::vector<bool> used(over_w.size(), false);
      std::vector<BiPoly> out;
      for (std::size_t i = 0; i < over_w.size(); ++i) {
        if (used[i]) continue;
        BiPoly prod = over_w[i];
        used[i] = true;
        for (BiPoly c = over_w[i].frobenius(m); !(c == over_w[i]);
             c = c.frobenius(m)) {
          auto it = std::find(over_w.begin(), over_w.end(), c);
          if (it == over_w.end())
            throw InvariantViolation("factor set not closed under Frobenius");
          used[it - over_w.begin()] = true;
          prod = prod * c;
        }
        auto down = prod.normalized().descend(emb);
        if (!down)
          throw InvariantViolation("orbit product does not descend to " +
                                   E.to_string());
        out.push_back(*down);
      }
      return out;
    }
  }
  throw CapacityError("no squarefree specialization of " + f.to_string() +
                      " in extensions of " + E.to_string() + " up to 2^32");
}

void factor_squarefree(const BiPoly& f, const FactorOptions& opts,
                       std::vector<BiPoly>& out) {
  const Field& E = f.field;
  BiPoly p = f;
  // Content as a polynomial in y.
  if (Coeffs cy = y_content(p); upoly::deg(cy) > 0) {
    for (auto& [q, mult] : univar_factor({E, cy}, opts.seed).factors)
      out.push_back(poly_in_y(E, q).normalized());
    for (auto& row : p.rows) row = upoly::quo(E, row, cy);
  }
  // Content as a polynomial in x.
  BiPoly t = p.transpose();
  if (Coeffs cx = y_content(t); upoly::deg(cx) > 0) {
    for (auto& [q, mult] : univar_factor({E, cx}, opts.seed).factors)
      out.push_back(poly_in_x(E, q).normalized());
    for (auto& row : t.rows) row = upoly::quo(E, row, cx);
    p = t.transpose();
  }
  if (p.is_constant()) return;
  for (auto& q : factor_primitive(p, opts)) out.push_back(q);
}

bool mpoly_less(const std::pair<MPoly, int>& a, const std::pair<MPoly, int>& b) {
  return canonical_less(a.first, b.first);
}

}  // namespace

MPoly Factorization::expand() const {
  MPoly r = MPoly::constant(field, unit);
  for (const auto& [p, mult] : factors) r *= p.pow(mult);
  return r;
}

int Factorization::count() const {
  int c = 0;
  for (const auto& [p, mult] : factors) c += mult;
  return c;
}

Factorization bivar_factor(const MPoly& f, const FactorOptions& opts) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  if (f.degree(Var::kZ) > 0)
    throw InvalidArgument("bivar_factor expects a polynomial in x, y");
  if (f.total_degree() > kMaxTotalDegree)
    throw CapacityError("total degree " + std::to_string(f.total_degree()) +
                        " exceeds " + std::to_string(kMaxTotalDegree));
  const BiPoly b = BiPoly::from_mpoly(f);
  Factorization out;
  out.field = f.field();
  out.unit = b.leading_coeff();

  std::vector<Piece> pieces;
  squarefree_split(b, 1, pieces);
  std::vector<std::pair<BiPoly, int>> merged;
  for (const auto& piece : pieces) {
    std::vector<BiPoly> irr;
    factor_squarefree(piece.f, opts, irr);
    for (auto& q : irr) {
      auto it = std::find_if(merged.begin(), merged.end(),
                             [&](const auto& e) { return e.first == q; });
      if (it == merged.end()) {
        merged.emplace_back(q, piece.mult);
      } else {
        it->second += piece.mult;
      }
    }
  }
  for (auto& [q, mult] : merged) out.factors.emplace_back(q.to_mpoly(), mult);
  std::sort(out.factors.begin(), out.factors.end(), mpoly_less);
  if (out.expand() != f)
    throw InvariantViolation("factorization does not reconstruct " +
                             f.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Absolute irreducibility

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// A point of f over K with a nonzero gradient.
std::optional<std::pair<uint32_t, uint32_t>> smooth_point(const BiPoly& f,
                                                          uint64_t seed) {
  const Field& K = f.field;
  const BiPoly fx = f.derivative_x(), fy = f.derivative_y();
  const uint64_t limit = std::min<uint64_t>(K.size(), 256);
  for (uint64_t yi = 0; yi < limit; ++yi) {
    const uint32_t y0 = static_cast<uint32_t>(yi);
    const Coeffs u = f.eval_y(y0);
    if (u.empty()) continue;
    for (uint32_t x0 : find_roots(K, u, seed)) {
      if (upoly::eval(K, fx.eval_y(y0), x0) != 0 ||
          upoly::eval(K, fy.eval_y(y0), x0) != 0)
        return std::make_pair(x0, y0);
    }
  }
  return std::nullopt;
}

}  // namespace

AbsIrredResult absolutely_irreducible(const MPoly& f,
                                      const AbsIrredOptions& opts) {
  if (f.is_constant())
    throw InvalidArgument("absolute irreducibility of a constant");
  AbsIrredResult res;
  const Field& E = f.field();
  const int m = E.degree();
  Factorization base = bivar_factor(f, opts.factor);
  if (base.count() != 1) {
    res.splitting = std::move(base);
    res.summary = "reducible over " + E.to_string();
    return res;
  }
  const int D = f.total_degree();
  int g = D;
  const BiPoly b = BiPoly::from_mpoly(f);
  if (opts.point_certificates) {
    for (int j = 1; g > 1 && m * j <= 32 && j <= 2 * D; ++j) {
      if (std::gcd(g, j) == g) continue;
      const Field K = j == 1 ? E : extension_field(E, j);
      if (auto pt = smooth_point(b.map(embed(E, K)), opts.factor.seed)) {
        g = std::gcd(g, j);
        res.point_certificates.push_back({j, {pt->first, pt->second}});
      }
    }
  }
  for (int p : prime_divisors(g)) {
    if (m * p > 32) {
      res.skipped_primes.push_back(p);
      continue;
    }
    const Field K = extension_field(E, p);
    Factorization ext = bivar_factor(f.map(embed(E, K)), opts.factor);
    if (ext.count() != 1) {
      res.splitting = std::move(ext);
      res.summary = "splits over " + K.to_string();
      return res;
    }
    res.tested_primes.push_back(p);
  }
  if (!res.skipped_primes.empty()) {
    res.capacity_skipped = true;
    res.summary = "undecided: extension beyond GF(2^32) needed";
    return res;
  }
  res.absolutely_irreducible = true;
  res.summary = "irreducible over all tested extensions";
  return res;
}

}  // namespace fermat
