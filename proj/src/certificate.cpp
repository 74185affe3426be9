#include "pentaflag/certificate.hpp"

#include "pentaflag/census.hpp"
#include "pentaflag/extremal.hpp"
#include "pentaflag/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pentaflag {

namespace {

using Kind = CertificateError::Kind;

void require_square(const RationalMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw CertificateError(Kind::kNotSquare, "matrix not square");
  }
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].sign() == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].sign() == 0) continue;
      const Rational factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

AlgebraElement lifted_graph(const SmallGraph& g, const Rational& c, int level) {
  if (g.order() > level) {
    throw CertificateError(Kind::kBlockTooLarge, "graph on " + std::to_string(g.order()) +
                                                     " vertices exceeds level " + std::to_string(level));
  }
  return lift(AlgebraElement::graph(g, c), level);
}

void require_level(int level) {
  if (level < 1 || level > kMaxCertificateLevel) {
    throw CertificateError(Kind::kLevelOutOfRange,
                           "level must be in 1.." + std::to_string(kMaxCertificateLevel));
  }
}

std::vector<ModelCoefficient> in_census_order(const AlgebraElement& e, int level, unsigned workers) {
  std::vector<ModelCoefficient> out;
  for (const SmallGraph& model : enumerate_models(level, workers).models) {
    out.push_back({model, e.coefficient(Flag::graph(model))});
  }
  return out;
}

AlgebraElement sos_part(const Certificate& cert, unsigned workers) {
  require_level(cert.level);
  for (const auto& block : cert.sos_blocks) {
    if (block_degree(block) > cert.level) {
      throw CertificateError(Kind::kBlockTooLarge, "block '" + block.name + "' expands beyond level " +
                                                       std::to_string(cert.level));
    }
  }
  std::vector<AlgebraElement> parts(cert.sos_blocks.size());
  parallel_for(parts.size(), workers == 0 ? default_workers() : workers, [&](std::size_t i, unsigned) {
    parts[i] = lift(block_square(cert.sos_blocks[i]), cert.level);
  });
  AlgebraElement total{TypeSigma::trivial()};
  for (const auto& p : parts) total += p;
  return total;
}

AlgebraElement full_lhs(const Certificate& cert, unsigned workers) {
  AlgebraElement total = sos_part(cert, workers);
  total += lifted_graph(cert.target, cert.target_coefficient, cert.level);
  for (const auto& term : cert.linear_terms) total += lifted_graph(term.graph, term.coefficient, cert.level);
  return total;
}

}  // namespace

void require_symmetric(const RationalMatrix& m) {
  require_square(m);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i][j] != m[j][i]) throw CertificateError(Kind::kNotSymmetric, "matrix not symmetric");
    }
  }
}

bool check_psd(const RationalMatrix& m) {
  require_symmetric(m);
  const std::size_t n = m.size();
  BigInt scale = 1;
  for (const auto& row : m) {
    for (const auto& x : row) {
      BigInt d = x.denominator();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    }
  }
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].numerator() * (scale / m[i][j].denominator());
  }
  // Bareiss elimination on the diagonal; zero pivots must come with a zero row.
  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const BigInt pivot = a[k][k];
    if (pivot < 0) return false;
    if (pivot == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j] != 0) return false;
      }
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = pivot;
  }
  return true;
}

bool psd_by_principal_minors(const RationalMatrix& m) {
  require_symmetric(m);
  const std::size_t n = m.size();
  if (n > 12) throw std::invalid_argument("principal-minor check limited to 12x12");
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1U) idx.push_back(i);
    }
    RationalMatrix sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = m[idx[i]][idx[j]];
    }
    if (determinant(std::move(sub)).sign() < 0) return false;
  }
  return true;
}

int block_degree(const SosBlock& block) {
  int m = block.type.size();
  for (const auto& e : block.vector) m = std::max(m, e.max_flag_size());
  return 2 * m - block.type.size();
}

AlgebraElement block_square(const SosBlock& block) {
  require_symmetric(block.matrix);
  const std::size_t d = block.vector.size();
  if (block.matrix.size() != d) {
    throw CertificateError(Kind::kDimensionMismatch, "block '" + block.name + "' has a " +
                                                         std::to_string(block.matrix.size()) +
                                                         "x" + std::to_string(block.matrix.size()) +
                                                         " matrix for " + std::to_string(d) + " vector entries");
  }
  AlgebraElement q(block.type);
  for (const auto& e : block.vector) {
    if (e.type() != block.type) throw CertificateError(Kind::kLabelsMismatch, "vector entry over a different type");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Rational c = block.matrix[i][j];
      if (c.sign() == 0) continue;
      if (i != j) c *= 2;
      q += c * flag_product(block.vector[i], block.vector[j]);
    }
  }
  return average(q);
}

std::vector<ModelCoefficient> expand_lhs(const Certificate& cert, unsigned workers) {
  return in_census_order(full_lhs(cert, workers), cert.level, workers);
}

std::vector<ModelCoefficient> expand_sos(const Certificate& cert, unsigned workers) {
  return in_census_order(sos_part(cert, workers), cert.level, workers);
}

VerificationReport verify(const Certificate& cert, unsigned workers) {
  VerificationReport report;
  report.level = cert.level;
  report.bound = cert.bound;
  report.target_coefficient = cert.target_coefficient;
  report.all_psd = true;
  for (const auto& block : cert.sos_blocks) {
    BlockCheck check{block.name, block.matrix.size(), false, false};
    try {
      require_symmetric(block.matrix);
      check.symmetric = true;
      check.psd = check_psd(block.matrix);
    } catch (const CertificateError&) {
    }
    report.all_psd = report.all_psd && check.psd;
    report.blocks.push_back(std::move(check));
  }
  if (cert.target_coefficient.sign() <= 0) {
    report.failure = "target coefficient must be positive";
    return report;
  }
  report.derived_bound = cert.bound / cert.target_coefficient;
  if (!report.all_psd) report.failure = "an SOS matrix is not positive semidefinite";
  try {
    report.coefficients = expand_lhs(cert, workers);
  } catch (const CertificateError& e) {
    report.failure = e.what();
    return report;
  } catch (const FlagError& e) {
    report.failure = e.what();
    return report;
  }
  report.coefficients_within_bound = true;
  for (std::size_t i = 0; i < report.coefficients.size(); ++i) {
    const Rational& c = report.coefficients[i].coefficient;
    if (i == 0 || c > report.max_coefficient) report.max_coefficient = c;
    report.slack.push_back(cert.bound - c);
    if (c > cert.bound) report.coefficients_within_bound = false;
  }
  if (!report.coefficients_within_bound && !report.failure) {
    report.failure = "an expanded coefficient exceeds the bound";
  }
  report.pass = report.all_psd && report.coefficients_within_bound;
  return report;
}

SmallGraph graph_M4() { return canonical_form(path_graph(5)); }

SmallGraph graph_C5_minus() { return canonical_form(disjoint_union(path_graph(4), SmallGraph(1))); }

Certificate bundled_pentagon_certificate() {
  const TypeSigma s0 = sigma_type(0);
  const TypeSigma s1 = sigma_type(1);
  const TypeSigma s2 = sigma_type(2);
  auto f = [](const TypeSigma& t, int j) { return flag_fj(t, j); };
  auto F = [](const TypeSigma& t, std::initializer_list<int> v) { return AlgebraElement::of(flag_FV(t, v)); };
  auto r = [](long n) { return Rational(n); };
  auto matrix = [](std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix m;
    for (auto row : rows) {
      m.emplace_back();
      for (long x : row) m.back().emplace_back(x);
    }
    return m;
  };

  Certificate cert;
  cert.level = 5;
  cert.bound = 2400;
  cert.target = canonical_form(cycle_graph(5));
  cert.target_coefficient = 62500;
  cert.linear_terms = {{"M4", graph_M4(), Rational(1097, 12)}, {"C5-", graph_C5_minus(), Rational(68, 3)}};

  cert.sos_blocks.push_back(
      {"g0+", s0,
       {f(s0, 1) - f(s0, 2), f(s0, 1) - r(2) * f(s0, 0) + r(3) * f(s0, 3)},
       matrix({{9760, 2252}, {2252, 592}})});
  cert.sos_blocks.push_back(
      {"g1+", s1,
       {r(2) * f(s1, 0) - f(s1, 1), f(s1, 1) - f(s1, 2), F(s1, {3})},
       matrix({{13900, -671, -12807}, {-671, 31334, -51136}, {-12807, -51136, 98157}})});
  cert.sos_blocks.push_back(
      {"g2+", s2,
       {r(6) * f(s2, 0) + f(s2, 1) - r(4) * f(s2, 2), r(2) * f(s2, 0) - r(2) * f(s2, 2) + F(s2, {3})},
       matrix({{22708, -40788}, {-40788, 78132}})});
  cert.sos_blocks.push_back(
      {"g1-", s1,
       {F(s1, {1}) - F(s1, {2}), F(s1, {2, 3}) - F(s1, {1, 3})},
       matrix({{1416, -16452}, {-16452, 256488}})});
  cert.sos_blocks.push_back(
      {"edge-centered", TypeSigma::trivial(),
       {AlgebraElement::graph(complete_graph(2)) - AlgebraElement::constant(TypeSigma::trivial(), Rational(2, 5))},
       matrix({{200}})});
  cert.sos_blocks.push_back(
      {"sigma2-antisymmetric", s2, {F(s2, {1}) - F(s2, {2})}, matrix({{158266}})});
  return cert;
}

FigureIdentification identify_figure_graphs(unsigned workers) {
  Certificate base = bundled_pentagon_certificate();
  const Rational m4_coefficient = base.linear_terms.at(0).coefficient;
  const Rational c5m_coefficient = base.linear_terms.at(1).coefficient;
  base.linear_terms.clear();
  const auto sos = expand_sos(base, workers);
  const SmallGraph c5 = cycle_graph(5);

  FigureIdentification out;
  auto zero_density_subgraphs = [&](const SmallGraph& host) {
    std::set<SmallGraph> found;
    for_each_subset_of_size(host.all_vertices(), 5, [&](VertexMask mask) {
      const SmallGraph sub = canonical_form(host.induced(mask));
      if (phi_blowup_density(sub, c5).sign() == 0) found.insert(sub);
    });
    return found;
  };
  const auto c5m = zero_density_subgraphs(disjoint_union(c5, SmallGraph(1)));
  SmallGraph pendant = c5;
  pendant.add_vertex(VertexMask{1});
  auto m4 = zero_density_subgraphs(pendant);
  for (const auto& g : c5m) m4.erase(g);
  out.c5_minus_candidates.assign(c5m.begin(), c5m.end());
  out.m4_candidates.assign(m4.begin(), m4.end());

  std::vector<FigureAssignment> consistent;
  for (std::size_t a = 0; a < sos.size(); ++a) {
    for (std::size_t b = 0; b < sos.size(); ++b) {
      if (a == b) continue;
      bool ok = true;
      for (std::size_t i = 0; i < sos.size() && ok; ++i) {
        Rational c = sos[i].coefficient;
        if (sos[i].model == canonical_form(c5)) c += base.target_coefficient;
        if (i == a) c += m4_coefficient;
        if (i == b) c += c5m_coefficient;
        ok = c <= base.bound;
      }
      if (!ok) continue;
      FigureAssignment assignment{sos[a].model, sos[b].model};
      out.passing.push_back(assignment);
      if (m4.contains(assignment.m4) && c5m.contains(assignment.c5_minus)) {
        consistent.push_back(assignment);
      }
    }
  }
  if (consistent.size() == 1) out.selected = consistent.front();
  return out;
}

}  // namespace pentaflag
