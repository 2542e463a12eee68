// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "oracles.hpp"
#include "stabcoh/report.hpp"

#ifndef STABCOH_CLI_PATH
#error "STABCOH_CLI_PATH must name the stabcoh executable"
#endif

using namespace stabcoh;

namespace {

constexpr int kBound = 24;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("criterion %d: %s  %-58s %8.3f s (limit %g s)", id, pass ? "PASS" : "FAIL", title, secs, limit_s);
  if (!out.ok)
    std::printf("  [%s]", out.detail.c_str());
  else if (!in_time)
    std::printf("  [over time limit]");
  std::printf("\n");
  std::fflush(stdout);
}

std::string at_degree(const std::string& what, int d) { return what + " at degree " + std::to_string(d); }

Monomial e(unsigned i) { return Monomial::generator(i); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "contraction identity mu(m_l, m_l') = -e_{l+l'-1}", 1.0, [](Outcome& o) {
    const StableCohomology sc{DegreeBound(kBound)};
    int checked = 0;
    for (unsigned l = 1; 2 * l <= kBound; ++l)
      for (unsigned k = 1; 2 * (l + k - 1) <= kBound; ++k) {
        o.require(sc.contraction_pairing(twisted_class(l), twisted_class(k)) == AlgebraElement(e(l + k - 1), -1),
                  "pair (" + std::to_string(l) + ", " + std::to_string(k) + ")");
        ++checked;
      }
    o.require(checked > 0, "nothing checked");
  });

  criterion(2, "delta_contravariant injective, coker free on m_{a>=2}", 5.0, [](Outcome& o) {
    // cohomological degree 24 reaches internal degree 25, one step past 24
    const StableCohomology sc{DegreeBound(kBound + 2)};
    const auto& contra = sc.delta_contravariant();
    for (int d = 0; d + 2 <= kBound + 2; d += 2)
      o.require(rank(contra.matrix(d)) == sc.algebra().hilbert_function(d), at_degree("not injective", d));
    const auto table = sc.tilde_dual_table(kBound);
    for (int k = 0; k <= kBound; ++k) {
      const std::size_t expected = k % 2 == 1 ? oracle::free_twisted_dim(k + 1, 2) : 0;
      o.require(table.dims.at(k) == expected, at_degree("cokernel dimension", k));
    }
  });

  criterion(3, "delta_covariant onto A_{>0}, even part = {0: 1}", 5.0, [](Outcome& o) {
    const StableCohomology sc{DegreeBound(kBound + 2)};
    const auto hilbert = oracle::hilbert_series(kBound);
    for (int d = 2; d <= kBound; d += 2)
      o.require(rank(sc.delta_covariant().matrix(d)) == hilbert[d], at_degree("not surjective", d));
    const auto table = sc.tilde_table(kBound);
    for (int k = 0; k <= kBound; k += 2) o.require(table.dims.at(k) == (k == 0 ? 1u : 0u), at_degree("even class", k));
  });

  criterion(4, "M_{i,j} syzygy, span = ker delta_cov, generators = Lambda^2 E", 20.0, [](Outcome& o) {
    const StableCohomology sc{DegreeBound(kBound), 4};
    for (unsigned i = 1; i <= kBound / 2; ++i)
      for (unsigned j = i + 1; j <= kBound / 2; ++j)
        for (unsigned k = j + 1; 2 * (i + j + k) <= kBound; ++k) {
          const auto s = antisymmetric_class(j, k).times(e(i)) + antisymmetric_class(k, i).times(e(j)) +
                         antisymmetric_class(i, j).times(e(k));
          o.require(s.is_zero(), "syzygy fails for " + std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(k));
        }
    const auto report = sc.verify_generators(kBound);
    o.require(report.ok, "generator report: " + report.failure);
    const auto lam = oracle::exterior_series(2, kBound);
    for (const auto& g : report.degrees) {
      o.require(g.span_rank == g.kernel_dim && g.all_in_kernel, at_degree("span differs from kernel", g.internal_degree));
      o.require(g.minimal_generators == lam[2][g.internal_degree], at_degree("generator count", g.internal_degree));
    }
    o.require(report.degrees.size() >= kBound / 2, "degrees missing from report");
    const auto gens = minimal_generators(*sc.covariant_kernel().module, kBound);
    const std::map<int, std::size_t> expected{{6, 1}, {8, 1}, {10, 2}, {12, 2}};
    for (const auto& [d, n] : expected) o.require(gens.counts.count(d) && gens.counts.at(d) == n, at_degree("count", d));
  });

  criterion(5, "Tor_j = Lambda^j + Lambda^{j+2}, Tor_0 = Lambda^2 + theta", 30.0, [](Outcome& o) {
    const StableCohomology sc{DegreeBound(kBound), 4};
    const auto& m = sc.tilde_module();
    const auto lam = oracle::exterior_series(6, kBound);
    for (int j = 0; j <= 4; ++j)
      for (int d = 0; d <= kBound; ++d) {
        const std::size_t expected = j == 0 ? lam[2][d] + (d == 0) : lam[j][d] + lam[j + 2][d];
        o.require(tor(m, j, d) == expected, "j=" + std::to_string(j) + " " + at_degree("tor", d));
      }
    o.require(tor(m, 1, 2) == 1, "non-freeness certificate");
    const auto report = sc.verify_tor(4, kBound);
    o.require(report.ok && report.non_free, "verify_tor disagrees");
  });

  criterion(6, "resolution exact, Cartan identity, L_D eigenvalues m+n", 10.0, [](Outcome& o) {
    const FormsComplex fc{DegreeBound(kBound)};
    for (int d = 1; d <= kBound; ++d) o.require(fc.verify_exactness(d).exact(), at_degree("not exact", d));
    for (int d = 0; d <= kBound; ++d)
      for (int n = 0; n <= fc.max_form_degree(); ++n) {
        o.require(fc.verify_cartan(n, d), at_degree("Cartan n=" + std::to_string(n), d));
        const auto lie = fc.lie_derivative(n, d);
        const auto basis = fc.form_basis(n, d);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          const long eigenvalue = static_cast<long>(basis[i].coefficient.factor_count()) + n;
          o.require(lie.row(i).size() == (eigenvalue == 0 ? 0u : 1u) && lie.at(i, i) == eigenvalue,
                    at_degree("eigenvalue", d));
        }
      }
  });

  criterion(7, "H^1(B_3; Q^2) = 0 with dim Z^1 = dim B^1 = 2", 0.1, [](Outcome& o) {
    const auto b3 = braid_group_b3();
    const auto z1 = cocycle_space(b3.presentation, b3.representation);
    const auto b1 = coboundary_space(b3.representation);
    o.require(z1.size() == 2, "dim Z^1 = " + std::to_string(z1.size()));
    o.require(b1.size() == 2, "dim B^1 = " + std::to_string(b1.size()));
    o.require(h1_dimension(b3.presentation, b3.representation) == 0, "h1 nonzero");
  });

  criterion(8, "ker delta_cov (coh 2k+1) = ker p_D (internal 2k+2)", 5.0, [](Outcome& o) {
    const StableCohomology sc{DegreeBound(kBound)};
    const FormsComplex fc{DegreeBound(kBound)};
    for (int k = 0; 2 * k + 2 <= kBound; ++k) {
      const int d = 2 * k + 2;
      const std::size_t via_delta = sc.covariant_kernel().module->dim(d);
      const std::size_t via_forms = kernel_basis(fc.interior_product(1, d)).size();
      o.require(via_delta == via_forms, at_degree("kernel dims differ", d));
      o.require(sc.delta_covariant().matrix(d) == fc.interior_product(1, d) * Rational(-1),
                at_degree("delta_cov != -p_D", d));
    }
  });

  criterion(9, "verify-all --max-degree 24 exits 0, JSON byte-deterministic", 60.0, [](Outcome& o) {
    const auto dir = std::filesystem::temp_directory_path() / ("stabcoh_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::string reports[2];
    for (int run = 0; run < 2; ++run) {
      const auto out = dir / ("report" + std::to_string(run) + ".json");
      const std::string cmd = std::string("\"") + STABCOH_CLI_PATH + "\" verify-all --max-degree 24 --jobs 4 --out \"" +
                              out.string() + "\"";
      const int status = std::system(cmd.c_str());
      o.require(status == 0, "exit status " + std::to_string(status));
      reports[run] = slurp(out);
    }
    std::filesystem::remove_all(dir);
    o.require(!reports[0].empty(), "empty report");
    o.require(reports[0] == reports[1], "reports differ");
    o.require(reports[0].find("\"all_pass\": true") != std::string::npos, "report does not pass");
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
