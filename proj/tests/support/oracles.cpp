#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace oracle {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t reduce(const svred::Rational& q, std::uint64_t p) {
  return mulmod(reduce(q.get_num(), p), inverse(reduce(q.get_den(), p), p), p);
}

// Row echelon form over F_p, rows as dense vectors. Returns rank.
struct Echelon {
  std::uint64_t p;
  std::size_t width;
  std::vector<std::vector<std::uint64_t>> rows;  // pivot at pivots[i]
  std::vector<std::size_t> pivots;

  // Reduces v against the current rows; returns true if v became zero.
  bool reduce_vector(std::vector<std::uint64_t>& v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t c = pivots[i];
      if (v[c] == 0) continue;
      const std::uint64_t f = v[c];
      for (std::size_t k = c; k < width; ++k)
        if (rows[i][k]) v[k] = (v[k] + p - mulmod(f, rows[i][k], p)) % p;
    }
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
  }

  bool insert(std::vector<std::uint64_t> v) {
    if (reduce_vector(v)) return false;
    std::size_t c = 0;
    while (v[c] == 0) ++c;
    const std::uint64_t inv = inverse(v[c], p);
    for (auto& x : v) x = mulmod(x, inv, p);
    // Keep existing rows reduced at the new pivot column.
    for (auto& row : rows) {
      if (row[c] == 0) continue;
      const std::uint64_t f = row[c];
      for (std::size_t k = 0; k < width; ++k)
        if (v[k]) row[k] = (row[k] + p - mulmod(f, v[k], p)) % p;
    }
    rows.push_back(std::move(v));
    pivots.push_back(c);
    return true;
  }
};

void monomials_rec(std::size_t n, std::size_t var, std::uint64_t left, std::vector<svred::Exponent>& cur,
                   std::vector<Monomial>& out) {
  if (var + 1 == n) {
    cur[var] = static_cast<svred::Exponent>(left);
    out.emplace_back(cur);
    return;
  }
  for (std::uint64_t e = 0; e <= left; ++e) {
    cur[var] = static_cast<svred::Exponent>(left - e);
    monomials_rec(n, var + 1, e, cur, out);
  }
}

// Rank over F_p of a matrix given by rows.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t width, std::uint64_t p) {
  Echelon e{p, width, {}, {}};
  for (auto& r : rows) e.insert(std::move(r));
  return e.rows.size();
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<Monomial> out;
  if (n == 0) return out;
  std::vector<svred::Exponent> cur(n, 0);
  monomials_rec(n, 0, d, cur, out);
  return out;
}

bool macaulay_contains(const std::vector<Polynomial>& gens, const Polynomial& f, std::uint64_t p) {
  if (f.is_zero()) return true;
  const std::size_t n = f.nvars();
  const std::uint64_t d = f.degree();
  const auto basis = monomials_of_degree(n, d);
  std::map<std::vector<svred::Exponent>, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i)
    column[std::vector<svred::Exponent>(basis[i].exponents().begin(), basis[i].exponents().end())] = i;
  auto to_vector = [&](const Polynomial& g) {
    std::vector<std::uint64_t> v(basis.size(), 0);
    for (const auto& t : g.terms()) {
      const auto e = t.mono.exponents();
      v[column.at(std::vector<svred::Exponent>(e.begin(), e.end()))] = reduce(t.coeff, p);
    }
    return v;
  };
  Echelon ech{p, basis.size(), {}, {}};
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(n, d - g.degree()))
      ech.insert(to_vector(g * Polynomial::from_monomial(m)));
  }
  auto v = to_vector(f);
  return ech.reduce_vector(v);
}

bool reduction_at(const Ideal& j, const Ideal& i, unsigned s) {
  auto product = svred::ideal_product(j, svred::ideal_power(i, s));
  std::vector<Polynomial> gens = product.generators();
  for (const auto& rel : i.ring()->relations()) gens.push_back(rel);
  const Ideal target = svred::ideal_power(i, s + 1);
  for (const auto& f : target.generators())
    if (!macaulay_contains(gens, f)) return false;
  return true;
}

bool brute_power_member(const Monomial& m, const std::vector<Monomial>& gens, unsigned k) {
  if (k == 0) return true;
  for (const auto& g : gens)
    if (g.divides(m) && brute_power_member(*svred::mono_quotient(m, g), gens, k - 1)) return true;
  return false;
}

unsigned brute_height(const std::vector<Monomial>& gens, std::size_t nvars) {
  unsigned best = static_cast<unsigned>(nvars) + 1;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << nvars); ++set) {
    bool covers = true;
    for (const auto& g : gens) {
      bool hit = false;
      for (std::size_t v = 0; v < nvars; ++v)
        if (((set >> v) & 1) && g[v] > 0) hit = true;
      if (!hit) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::min(best, static_cast<unsigned>(std::popcount(set)));
  }
  return best;
}

std::vector<std::size_t> hochster_betti(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<std::uint64_t> supports;
  for (const auto& g : gens) {
    std::uint64_t s = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] > 0) s |= std::uint64_t{1} << v;
    supports.push_back(s);
  }
  auto is_face = [&](std::uint64_t f) {
    return std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & f) == s; });
  };
  std::vector<std::size_t> totals(nvars + 1, 0);
  totals[0] = 1;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << nvars); ++w) {
    // Faces of Delta restricted to W, grouped by dimension (size - 1); the
    // empty face sits at size 0 for reduced homology.
    const int size_w = std::popcount(w);
    std::vector<std::vector<std::uint64_t>> faces(size_w + 1);
    for (std::uint64_t f = w;; f = (f - 1) & w) {
      if (is_face(f)) faces[std::popcount(f)].push_back(f);
      if (f == 0) break;
    }
    auto boundary_rank = [&](int k) -> std::size_t {  // from size k to size k-1
      if (k <= 0 || k > size_w || faces[k].empty() || faces[k - 1].empty()) return 0;
      std::map<std::uint64_t, std::size_t> col;
      for (std::size_t i = 0; i < faces[k - 1].size(); ++i) col[faces[k - 1][i]] = i;
      std::vector<std::vector<std::uint64_t>> rows;
      for (std::uint64_t f : faces[k]) {
        std::vector<std::uint64_t> row(faces[k - 1].size(), 0);
        int sign = 0;
        for (std::size_t v = 0; v < nvars; ++v) {
          if (!((f >> v) & 1)) continue;
          row[col.at(f & ~(std::uint64_t{1} << v))] = sign % 2 == 0 ? 1 : kPrime - 1;
          ++sign;
        }
        rows.push_back(std::move(row));
      }
      return rank_mod_p(std::move(rows), faces[k - 1].size(), kPrime);
    };
    for (int k = 0; k <= size_w; ++k) {
      // Reduced homology in dimension k-1 from faces of size k.
      const std::size_t dim = faces[k].size();
      if (dim == 0) continue;
      const std::size_t h = dim - boundary_rank(k) - boundary_rank(k + 1);
      if (h == 0) continue;
      const int i = size_w - (k - 1) - 1;
      totals[static_cast<std::size_t>(i)] += h;
    }
  }
  while (totals.size() > 1 && totals.back() == 0) totals.pop_back();
  return totals;
}

namespace {

Monomial lead(const Polynomial& f, const svred::TermOrder& order) {
  Monomial best = f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, best) > 0) best = t.mono;
  return best;
}

svred::Rational coeff_of(const Polynomial& f, const Monomial& m) {
  for (const auto& t : f.terms())
    if (t.mono == m) return t.coeff;
  return 0;
}

}  // namespace

bool naive_s_pairs_reduce(const svred::GroebnerBasis& basis) {
  const auto& els = basis.elements();
  const auto& order = basis.order();
  std::vector<Monomial> leads;
  for (const auto& e : els) leads.push_back(lead(e, order));
  auto remainder = [&](Polynomial f) {
    Polynomial rem(f.nvars());
    while (!f.is_zero()) {
      const Monomial lm = lead(f, order);
      const svred::Rational lc = coeff_of(f, lm);
      bool divided = false;
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (!leads[i].divides(lm)) continue;
        const auto q = *svred::mono_quotient(lm, leads[i]);
        const svred::Rational c = lc / coeff_of(els[i], leads[i]);
        f = f - c * (els[i] * Polynomial::from_monomial(q));
        divided = true;
        break;
      }
      if (!divided) {
        const Polynomial t = Polynomial::from_monomial(lm, lc);
        rem = rem + t;
        f = f - t;
      }
    }
    return rem;
  };
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const Monomial l = svred::lcm(leads[i], leads[j]);
      if (basis.degree_bound() && l.degree() > *basis.degree_bound()) continue;
      const Polynomial si = Polynomial::from_monomial(*svred::mono_quotient(l, leads[i]),
                                                      1 / svred::Rational(coeff_of(els[i], leads[i])));
      const Polynomial sj = Polynomial::from_monomial(*svred::mono_quotient(l, leads[j]),
                                                      1 / svred::Rational(coeff_of(els[j], leads[j])));
      if (!remainder(si * els[i] - sj * els[j]).is_zero()) return false;
    }
  return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
