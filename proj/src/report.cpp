#include "stabcoh/report.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "stabcoh/parallel.hpp"

namespace stabcoh {

using nlohmann::ordered_json;

namespace {

const std::map<std::string, std::string>& statements() {
  static const std::map<std::string, std::string> table = {
      {"contraction", "mu(m_{l,1}, m_{l',1}) = -e_{l+l'-1} for every pair inside the bound"},
      {"cartan", "L_D = d p_D + p_D d on every Omega^n_d, diagonal with eigenvalue m + n"},
      {"resolution", "... -> Omega^n -> Omega^{n-1} -> ... -> Omega^0 -> Q -> 0 with maps p_D is exact in every positive degree"},
      {"injectivity", "m_{1,1} cup - : H*_st(Q) -> H*_st(H_Q) is injective and H*_st(H~_Q^dual) is free on m_{a,1}, a >= 2"},
      {"surjectivity", "mu(m_{1,1}, -) : H*_st(H_Q) -> H*_st(Q) is onto the augmentation ideal and H^even_st(H~_Q) = Q theta"},
      {"cross_oracle", "ker mu(m_{1,1}, -) = ker(p_D : Omega^1 -> Omega^0) under m_{i,1} <-> de_i, with mu(m_{1,1}, -) = -p_D"},
      {"exact_sequence", "0 -> H^odd_st(H~_Q) -> H*_st(H_Q) -> H*_st(Q) -> Q -> 0 is exact"},
      {"generators", "H^odd_st(H~_Q) is generated by M_{i,j} = e_i m_{j,1} - e_j m_{i,1} with relations e_i M_{j,k} + e_j M_{k,i} + e_k M_{i,j} = 0"},
      {"tor", "Tor_j(Q, H*_st(H~_Q)) = Lambda^j E + Lambda^{j+2} E for j > 0 and Tor_0 = Lambda^2 E + Q theta; the module is not free"},
      {"h1_b3", "H^1(Gamma_{1,1}; H(1)) = 0 for Gamma_{1,1} = B_3 acting by s1 -> (1 1; 0 1), s2 -> (1 0; -1 1)"},
      {"h1", "dim H^1 of the given presentation and representation"},
  };
  return table;
}

template <typename Fn>
CheckResult timed(const std::string& id, Fn&& body) {
  CheckResult r;
  r.check_id = id;
  r.statement = check_statement(id);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Falsified& f) {
    r.pass = false;
    r.counterexample = ordered_json{{"degree", f.degree()}, {"reason", f.what()}};
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string render(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

const std::string& check_statement(const std::string& check_id) { return statements().at(check_id); }

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ordered_json VerificationReport::to_json() const {
  ordered_json out;
  out["artifact_version"] = artifact_version;
  out["degree_bound"] = degree_bound;
  out["all_pass"] = all_pass();
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["check_id"] = c.check_id;
    j["statement"] = c.statement;
    j["status"] = c.pass ? "pass" : "fail";
    j["per_degree_data"] = c.per_degree_data;
    if (!c.pass) j["counterexample"] = c.counterexample;
    list.push_back(std::move(j));
  }
  out["checks"] = std::move(list);
  return out;
}

ordered_json VerificationReport::timing_json() const {
  ordered_json out;
  out["artifact_version"] = artifact_version;
  out["degree_bound"] = degree_bound;
  ordered_json elapsed;
  for (const auto& c : checks) elapsed[c.check_id] = c.elapsed_ms;
  out["elapsed_ms"] = std::move(elapsed);
  return out;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "check_id,status,row,field,value\n";
  for (const auto& c : checks) {
    const char* status = c.pass ? "pass" : "fail";
    std::size_t row = 0;
    for (const auto& entry : c.per_degree_data) {
      for (const auto& [key, value] : entry.items()) {
        std::string v = render(value);
        if (v.find(',') != std::string::npos) v = "\"" + v + "\"";
        os << c.check_id << ',' << status << ',' << row << ',' << key << ',' << v << '\n';
      }
      ++row;
    }
    if (c.per_degree_data.empty()) os << c.check_id << ',' << status << ",,,\n";
  }
  return os.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "degree bound " << degree_bound << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.check_id << "  (" << static_cast<long>(c.elapsed_ms) << " ms)\n"
       << "       " << c.statement << "\n";
    if (!c.pass) os << "       counterexample: " << c.counterexample.dump() << "\n";
  }
  os << (all_pass() ? "all checks pass" : "some checks FAILED") << "\n";
  return os.str();
}

GroupInput braid_group_b3() {
  GroupPresentation pres(2, {{1, 2, 1, -2, -1, -2}});
  std::vector<SparseMatrix> images{
      SparseMatrix::from_dense({{1, 1}, {0, 1}}),
      SparseMatrix::from_dense({{1, 0}, {-1, 1}}),
  };
  MatrixRep rep(pres, 2, std::move(images));
  return GroupInput{std::move(pres), std::move(rep)};
}

// ------------------------------------------------------------------ checks

CheckResult check_contraction(const StableCohomology& sc) {
  return timed("contraction", [&](CheckResult& r) {
    r.pass = true;
    const int bound = sc.bound().value();
    for (unsigned l = 1; 2 * static_cast<int>(l) <= bound; ++l)
      for (unsigned lp = 1; 2 * static_cast<int>(l + lp - 1) <= bound; ++lp) {
        const AlgebraElement got = sc.contraction_pairing(twisted_class(l), twisted_class(lp));
        const AlgebraElement want = AlgebraElement::generator(l + lp - 1) * Rational(-1);
        const bool ok = got == want;
        r.per_degree_data.push_back(
            {{"l", l}, {"l_prime", lp}, {"value", got.to_string()}, {"ok", ok}});
        if (!ok && r.pass) {
          r.pass = false;
          r.counterexample = {{"l", l}, {"l_prime", lp}, {"value", got.to_string()}};
        }
      }
  });
}

CheckResult check_cartan(const FormsComplex& forms, unsigned jobs) {
  return timed("cartan", [&](CheckResult& r) {
    std::vector<std::pair<int, int>> cells;
    for (int n = 0; n <= forms.max_form_degree(); ++n)
      for (int d = 0; d <= forms.bound().value(); d += 2) cells.emplace_back(n, d);
    std::vector<char> ok(cells.size());
    std::vector<char> diagonal_positive(cells.size());
    parallel_for(cells.size(), jobs, [&](std::size_t k) {
      const auto [n, d] = cells[k];
      ok[k] = forms.verify_cartan(n, d);
      const SparseMatrix ev = forms.euler_eigenvalues(n, d);
      bool pos = true;
      for (std::size_t i = 0; i < ev.rows(); ++i)
        if (ev.at(i, i) <= 0 && !(n == 0 && d == 0)) pos = false;
      diagonal_positive[k] = pos;
    });
    r.pass = true;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto [n, d] = cells[k];
      r.per_degree_data.push_back({{"form_degree", n}, {"internal_degree", d}, {"dim", forms.dim(n, d)},
                                   {"cartan", static_cast<bool>(ok[k])},
                                   {"positive_eigenvalues", static_cast<bool>(diagonal_positive[k])}});
      if ((!ok[k] || !diagonal_positive[k]) && r.pass) {
        r.pass = false;
        r.counterexample = {{"form_degree", n}, {"internal_degree", d}};
      }
    }
  });
}

CheckResult check_resolution(const FormsComplex& forms, unsigned jobs) {
  return timed("resolution", [&](CheckResult& r) {
    std::vector<int> degrees;
    for (int d = 2; d <= forms.bound().value(); d += 2) degrees.push_back(d);
    std::vector<ExactnessReport> reports(degrees.size());
    parallel_for(degrees.size(), jobs, [&](std::size_t k) { reports[k] = forms.verify_exactness(degrees[k]); });
    r.pass = true;
    for (const auto& rep : reports) {
      for (const auto& s : rep.spots)
        r.per_degree_data.push_back({{"internal_degree", rep.internal_degree}, {"form_degree", s.form_degree},
                                     {"dim", s.dim}, {"rank_in", s.rank_in}, {"rank_out", s.rank_out},
                                     {"exact", s.exact}});
      if (!rep.exact() && r.pass) {
        r.pass = false;
        r.counterexample = {{"internal_degree", rep.internal_degree}};
      }
    }
  });
}

CheckResult check_injectivity(const StableCohomology& sc) {
  return timed("injectivity", [&](CheckResult& r) {
    const StableCohomologyTable t = sc.tilde_dual_table(sc.bound().value() - 1);
    for (const auto& [c, dim] : t.dims) {
      auto g = t.generators.find(c + 1);
      r.per_degree_data.push_back({{"cohomological_degree", c}, {"dim", dim},
                                   {"minimal_generators", c % 2 == 1 && g != t.generators.end() ? g->second : 0}});
    }
    r.pass = true;
  });
}

CheckResult check_surjectivity(const StableCohomology& sc) {
  return timed("surjectivity", [&](CheckResult& r) {
    const StableCohomologyTable t = sc.tilde_table(sc.bound().value() - 1);
    r.pass = true;
    for (const auto& [c, dim] : t.dims) {
      r.per_degree_data.push_back({{"cohomological_degree", c}, {"dim", dim}});
      if (c % 2 == 0 && dim != (c == 0 ? 1u : 0u) && r.pass) {
        r.pass = false;
        r.counterexample = {{"cohomological_degree", c}, {"dim", dim}};
      }
    }
    // the top even degree lies outside the table's range but not outside the bound
    const int top = sc.bound().value();
    if (top > 0 && rank(sc.delta_covariant().matrix(top)) != sc.algebra().hilbert_function(top) && r.pass) {
      r.pass = false;
      r.counterexample = {{"cohomological_degree", top}};
    }
  });
}

CheckResult check_cross_oracle(const StableCohomology& sc) {
  return timed("cross_oracle", [&](CheckResult& r) {
    r.pass = true;
    for (const auto& e : sc.cross_oracle(sc.bound().value())) {
      r.per_degree_data.push_back({{"internal_degree", e.internal_degree},
                                   {"cohomological_degree", e.internal_degree - 1},
                                   {"delta_kernel_dim", e.delta_kernel_dim},
                                   {"contraction_kernel_dim", e.contraction_kernel_dim},
                                   {"intertwined", e.matrices_intertwine}});
      if ((e.delta_kernel_dim != e.contraction_kernel_dim || !e.matrices_intertwine) && r.pass) {
        r.pass = false;
        r.counterexample = {{"internal_degree", e.internal_degree}};
      }
    }
  });
}

CheckResult check_exact_sequence(const StableCohomology& sc) {
  return timed("exact_sequence", [&](CheckResult& r) {
    r.pass = true;
    for (const auto& e : sc.exact_sequence_audit(sc.bound().value())) {
      r.per_degree_data.push_back({{"internal_degree", e.internal_degree}, {"kernel", e.kernel_dim},
                                   {"twisted", e.twisted_dim}, {"algebra", e.algebra_dim},
                                   {"augmentation", e.augmentation_dim}, {"ok", e.ok}});
      if (!e.ok && r.pass) {
        r.pass = false;
        r.counterexample = {{"internal_degree", e.internal_degree}};
      }
    }
  });
}

CheckResult check_generators(const StableCohomology& sc) {
  return timed("generators", [&](CheckResult& r) {
    const GeneratorReport g = sc.verify_generators(sc.bound().value());
    for (const auto& d : g.degrees)
      r.per_degree_data.push_back({{"internal_degree", d.internal_degree},
                                   {"cohomological_degree", d.internal_degree - 1},
                                   {"kernel_dim", d.kernel_dim}, {"span_size", d.span_size},
                                   {"span_rank", d.span_rank}, {"relations", d.relations},
                                   {"minimal_generators", d.minimal_generators},
                                   {"lambda2_dim", d.lambda2_dim}, {"ok", d.ok}});
    r.pass = g.ok;
    if (!g.ok)
      r.counterexample = {{"internal_degree", g.counterexample_degree.value_or(-1)}, {"reason", g.failure}};
  });
}

CheckResult check_tor(const StableCohomology& sc, int j_max) {
  return timed("tor", [&](CheckResult& r) {
    const TorReport t = sc.verify_tor(j_max, sc.bound().value());
    for (const auto& e : t.entries)
      r.per_degree_data.push_back({{"j", e.j}, {"internal_degree", e.internal_degree},
                                   {"tor_dim", e.computed}, {"expected", e.expected}});
    r.pass = t.ok && (sc.bound().value() < 2 || t.non_free);
    if (!t.mismatches.empty()) {
      const auto& m = t.mismatches.front();
      r.counterexample = {{"j", m.j}, {"internal_degree", m.internal_degree},
                          {"tor_dim", m.computed}, {"expected", m.expected}};
    } else if (!r.pass) {
      r.counterexample = {{"reason", "no nonzero Tor_1 found"}};
    }
  });
}

CheckResult check_h1(const GroupInput& input, const std::string& check_id) {
  return timed(check_id, [&](CheckResult& r) {
    const auto z1 = cocycle_space(input.presentation, input.representation);
    const auto b1 = coboundary_space(input.representation);
    // B^1 inside Z^1
    const SparseMatrix conditions = cocycle_conditions(input.presentation, input.representation);
    bool contained = true;
    for (const auto& v : b1) contained = contained && conditions.apply(v).is_zero();
    const std::size_t h1 = z1.size() - b1.size();
    r.per_degree_data.push_back({{"z1_dim", z1.size()}, {"b1_dim", b1.size()}, {"h1_dim", h1},
                                 {"coboundaries_are_cocycles", contained}});
    r.pass = contained && (check_id != "h1_b3" || h1 == 0);
    if (!r.pass) r.counterexample = {{"h1_dim", h1}};
  });
}

VerificationReport verify_all(int max_degree, unsigned jobs) {
  const DegreeBound bound(max_degree);
  VerificationReport report;
  report.degree_bound = max_degree;
  const StableCohomology sc(bound, jobs);
  report.checks.push_back(check_contraction(sc));
  report.checks.push_back(check_cartan(sc.forms(), jobs));
  report.checks.push_back(check_resolution(sc.forms(), jobs));
  report.checks.push_back(check_injectivity(sc));
  report.checks.push_back(check_surjectivity(sc));
  report.checks.push_back(check_cross_oracle(sc));
  report.checks.push_back(check_exact_sequence(sc));
  report.checks.push_back(check_generators(sc));
  report.checks.push_back(check_tor(sc, 4));
  report.checks.push_back(check_h1(braid_group_b3()));
  return report;
}

}  // namespace stabcoh
