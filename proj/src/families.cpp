#include "svred/families.hpp"

#include <numeric>
#include <sstream>

#include "svred/errors.hpp"

namespace svred {

namespace {

Polynomial product_of(std::size_t nvars, std::initializer_list<std::size_t> vars) {
  Monomial m(nvars);
  for (std::size_t v : vars) m = m * Monomial::variable(nvars, v);
  return Polynomial::from_monomial(m);
}

Polynomial edge(std::size_t nvars, std::size_t i, std::size_t j) { return product_of(nvars, {i, j}); }

std::vector<Polynomial> flatten(const std::vector<std::vector<Polynomial>>& parts) {
  std::vector<Polynomial> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Compositions l_1..l_q with 1 <= l_i <= h_i, in lexicographic order.
void compositions(const std::vector<unsigned>& h, std::vector<unsigned>& current,
                  std::vector<std::vector<unsigned>>& out) {
  if (current.size() == h.size()) {
    out.push_back(current);
    return;
  }
  for (unsigned v = 1; v <= h[current.size()]; ++v) {
    current.push_back(v);
    compositions(h, current, out);
    current.pop_back();
  }
}

struct DualCiLayout {
  std::vector<std::vector<unsigned>> h;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> offsets;  // per component, per block
};

DualCiLayout layout(const std::vector<std::vector<unsigned>>& hs) {
  DualCiLayout out;
  out.h = hs;
  const bool suffix = hs.size() > 1;
  for (std::size_t c = 0; c < hs.size(); ++c) {
    if (hs[c].empty()) throw PreconditionError("dual_ci needs at least one block");
    std::vector<std::size_t> blocks;
    for (std::size_t i = 0; i < hs[c].size(); ++i) {
      if (hs[c][i] < 1) throw PreconditionError("dual_ci block sizes must be at least 1");
      blocks.push_back(out.names.size());
      for (unsigned j = 1; j <= hs[c][i]; ++j) {
        std::string name = "x" + std::to_string(i + 1) + std::to_string(j);
        if (suffix) name += "_" + std::to_string(c + 1);
        out.names.push_back(std::move(name));
      }
    }
    out.offsets.push_back(std::move(blocks));
  }
  return out;
}

std::vector<std::vector<Polynomial>> dual_ci_parts(const DualCiLayout& lay, std::size_t c) {
  const auto& h = lay.h[c];
  const std::size_t nvars = lay.names.size();
  const unsigned q = static_cast<unsigned>(h.size());
  const unsigned total = std::accumulate(h.begin(), h.end(), 0u);
  std::vector<std::vector<unsigned>> comps;
  std::vector<unsigned> current;
  compositions(h, current, comps);
  std::vector<std::vector<Polynomial>> parts(total - q + 1);
  for (const auto& comp : comps) {
    Monomial m(nvars);
    unsigned sum = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      m = m * Monomial::variable(nvars, lay.offsets[c][i] + comp[i] - 1);
      sum += comp[i];
    }
    parts[sum - q].push_back(Polynomial::from_monomial(m));
  }
  return parts;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw PreconditionError("expected a comma-separated list of naturals, got '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (out.empty()) throw PreconditionError("expected a non-empty list, got '" + text + "'");
  return out;
}

Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw PreconditionError("not a rational number: '" + text + "'");
  }
}

}  // namespace

CertificateOptions FamilyBundle::certificate_options() const {
  CertificateOptions options;
  options.m_max = m_max;
  options.ba = ba;
  options.generators = generators;
  options.extra_checks = extra_checks;
  return options;
}

Certificate FamilyBundle::certificate() const { return build_certificate(kind, partition, certificate_options()); }

FamilyBundle dual_ci_sum(const std::vector<std::vector<unsigned>>& hs) {
  if (hs.empty()) throw PreconditionError("dual_ci_sum needs at least one component");
  const DualCiLayout lay = layout(hs);
  auto ring = RingContext::make(lay.names);
  std::vector<std::vector<Polynomial>> parts;
  unsigned pd = 0;
  for (std::size_t c = 0; c < hs.size(); ++c) {
    auto component_parts = dual_ci_parts(lay, c);
    pd += static_cast<unsigned>(component_parts.size());
    for (auto& part : component_parts) parts.push_back(std::move(part));
  }
  Ideal ideal(ring, flatten(parts));
  std::vector<Ideal> components;
  if (hs.size() == 1) {
    for (std::size_t i = 0; i < hs[0].size(); ++i) {
      std::vector<Polynomial> vars;
      for (unsigned j = 0; j < hs[0][i]; ++j)
        vars.push_back(Polynomial::variable(lay.names.size(), lay.offsets[0][i] + j));
      components.emplace_back(ring, std::move(vars));
    }
  }
  std::string params;
  for (std::size_t c = 0; c < hs.size(); ++c) {
    if (c) params += "+";
    for (std::size_t i = 0; i < hs[c].size(); ++i) params += (i ? "," : "") + std::to_string(hs[c][i]);
  }
  Partition partition(ideal, std::move(parts));
  return FamilyBundle{hs.size() == 1 ? "dual-ci" : "dual-ci-sum",
                      params,
                      ideal,
                      std::move(components),
                      std::move(partition),
                      CertificateKind::sv,
                      1,
                      std::nullopt,
                      {},
                      {},
                      ExpectedInvariants{pd, pd, pd}};
}

FamilyBundle dual_ci(const std::vector<unsigned>& h) {
  if (h.empty()) throw PreconditionError("dual_ci needs at least one block");
  return dual_ci_sum({h});
}

FamilyBundle even_cycle(unsigned r) {
  if (r < 2) throw PreconditionError("even_cycle needs r >= 2");
  const std::size_t n = 2 * r;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  auto ring = RingContext::make(names);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(edge(n, i, (i + 1) % n));
  Ideal ideal(ring, gens);
  std::vector<std::vector<Polynomial>> parts;
  for (std::size_t l = 0; l < r; ++l) parts.push_back({edge(n, 2 * l, 2 * l + 1)});
  std::vector<Polynomial> last;
  for (std::size_t l = 1; l < r; ++l) last.push_back(edge(n, 2 * l - 1, 2 * l));
  last.push_back(edge(n, n - 1, 0));
  parts.push_back(std::move(last));

  BaData ba;
  for (std::size_t l = 0; l < r; ++l) {
    ba.n.push_back(2);
    ba.matrices.push_back(linalg::DenseMatrix{{Rational(1)}});
  }
  ba.n.push_back(r);
  linalg::DenseMatrix a(r - 1, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i + 1 < r; ++i) {
    a[i][i] = 1;
    a[i][r - 1] = 1;
  }
  ba.matrices.push_back(std::move(a));

  const std::size_t count = 2 * r - 1;
  Partition partition(ideal, std::move(parts));
  return FamilyBundle{"even-cycle",
                      std::to_string(r),
                      ideal,
                      {},
                      std::move(partition),
                      CertificateKind::ba,
                      1,
                      std::move(ba),
                      {},
                      {},
                      ExpectedInvariants{std::nullopt, static_cast<unsigned>(count), count}};
}

FamilyBundle complete_graph_k5(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const std::vector<Rational> scalars{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i) {
    if (scalars[i] == 0) throw PreconditionError("k5 scalars must be nonzero");
    for (std::size_t j = i + 1; j < 4; ++j)
      if (scalars[i] == scalars[j]) throw PreconditionError("k5 scalars must be pairwise distinct");
  }
  const std::size_t n = 5;
  auto ring = RingContext::make({"x1", "x2", "x3", "x4", "x5"});
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(edge(n, i, j));
  Ideal ideal(ring, gens);
  auto e = [&](std::size_t i, std::size_t j) { return edge(n, i - 1, j - 1); };
  std::vector<std::vector<Polynomial>> parts{
      {e(1, 2)},
      {e(2, 3), e(4, 5)},
      {e(3, 4), e(1, 5)},
      {e(1, 3), e(1, 4), e(2, 4), e(2, 5), e(3, 5)},
  };
  const std::vector<Polynomial> top{e(1, 3), e(1, 4), e(2, 4), e(2, 5), e(3, 5)};
  auto combo = [&](unsigned power) {
    Polynomial g = top[0];
    for (std::size_t k = 0; k < 4; ++k) {
      Rational coeff = 1;
      for (unsigned p = 0; p < power; ++p) coeff *= scalars[k];
      g = g + coeff * top[k + 1];
    }
    return g;
  };
  std::vector<Polynomial> reduction{e(1, 2), e(2, 3) + e(4, 5), e(3, 4) + e(1, 5), combo(1), combo(2)};
  std::string params;
  for (std::size_t k = 0; k < 4; ++k) params += (k ? "," : "") + rational_to_string(scalars[k]);
  Partition partition(ideal, std::move(parts));
  return FamilyBundle{"k5",
                      params,
                      ideal,
                      {},
                      std::move(partition),
                      CertificateKind::oracle_only,
                      1,
                      std::nullopt,
                      std::move(reduction),
                      {ContainmentCheck{2, 3, {0, 1, 2}, 2}},
                      ExpectedInvariants{std::nullopt, 5u, 5u}};
}

FamilyBundle binomial_example() {
  const std::size_t n = 6;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  auto ring = RingContext::make(names);
  auto e = [&](std::size_t i, std::size_t j) { return edge(n, i - 1, j - 1); };
  const Polynomial binomial = e(1, 2) + e(1, 3);
  std::vector<Polynomial> gens{binomial, e(1, 4), e(1, 5), e(1, 6), e(2, 5), e(2, 6),
                               e(3, 4),  e(3, 6), e(4, 5), e(4, 6), e(5, 6)};
  Ideal ideal(ring, gens);
  std::vector<std::vector<Polynomial>> parts{
      {e(1, 6)},         {e(1, 5), e(2, 6)}, {e(1, 4), e(3, 6)},
      {e(2, 5), e(4, 6)}, {e(3, 4), e(5, 6)}, {binomial, e(4, 5)},
  };
  Partition partition(ideal, std::move(parts));
  return FamilyBundle{"binomial",
                      "",
                      ideal,
                      {},
                      std::move(partition),
                      CertificateKind::b,
                      4,
                      std::nullopt,
                      {},
                      {},
                      ExpectedInvariants{std::nullopt, 6u, 6u}};
}

FamilyBundle hypersurface_example(unsigned m) {
  if (m < 2) throw PreconditionError("hypersurface needs m >= 2");
  const std::size_t n = 3;
  const auto x = Polynomial::variable(n, 0);
  const auto y = Polynomial::variable(n, 1);
  const auto z = Polynomial::variable(n, 2);
  const Polynomial relation = x.pow(m) * y.pow(m) - z.pow(2 * m);
  auto ring = RingContext::make({"x", "y", "z"}, {relation}, true);
  Ideal ideal(ring, {x, y, z});
  Partition partition(ideal, {{z}, {x, y}});
  return FamilyBundle{"hypersurface",
                      std::to_string(m),
                      ideal,
                      {},
                      std::move(partition),
                      CertificateKind::b,
                      m,
                      std::nullopt,
                      {},
                      {},
                      ExpectedInvariants{std::nullopt, std::nullopt, 2u}};
}

FamilyBundle make_family(const std::string& name, const std::string& params) {
  if (name == "dual-ci") return dual_ci(parse_unsigned_list(params));
  if (name == "dual-ci-sum") {
    std::vector<std::vector<unsigned>> hs;
    std::stringstream in(params);
    std::string item;
    while (std::getline(in, item, '+')) hs.push_back(parse_unsigned_list(item));
    return dual_ci_sum(hs);
  }
  if (name == "even-cycle") return even_cycle(parse_unsigned_list(params).at(0));
  if (name == "hypersurface") return hypersurface_example(parse_unsigned_list(params).at(0));
  if (name == "binomial") return binomial_example();
  if (name == "k5") {
    if (params.empty()) return complete_graph_k5();
    std::vector<Rational> s;
    std::stringstream in(params);
    std::string item;
    while (std::getline(in, item, ',')) s.push_back(parse_rational(item));
    if (s.size() != 4) throw PreconditionError("k5 takes four scalars a,b,c,d");
    return complete_graph_k5(s[0], s[1], s[2], s[3]);
  }
  throw PreconditionError("unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
  return {"dual-ci", "dual-ci-sum", "even-cycle", "k5", "binomial", "hypersurface"};
}

}  // namespace svred
