// Acceptance run: one PASS/FAIL line per criterion, over every builtin group.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "bilax/coherence.hpp"
#include "tannaka.hpp"

using namespace bilax;

namespace {

struct Criterion {
  bool pass = true;
  double worst = 0;
  std::string note;

  void observe(double dev, double tol, const std::string& where) {
    if (!(dev <= tol)) {
      if (pass) note = where;
      pass = false;
    }
    if (std::isnan(dev) || dev > worst) worst = std::isnan(dev) ? INFINITY : dev;
  }
  void require(bool ok, const std::string& where) {
    if (!ok && pass) note = where;
    pass = pass && ok;
  }
};

struct GroupRun {
  std::shared_ptr<const Centre> z;
  std::unique_ptr<CoherenceChecker> checker;
};

CheckConfig acceptance_config(std::uint64_t seed) {
  CheckConfig cfg;
  cfg.pool.cap = 16;
  cfg.pool.seed = seed;
  cfg.ambient_cap = 256;
  cfg.tolerance = 1e-9;
  return cfg;
}

GroupRun make_run(const std::string& name, std::uint64_t seed) {
  GroupRun r;
  r.z = std::make_shared<Centre>(std::make_shared<RepCategory>(FiniteGroup::builtin(name), seed));
  r.checker = std::make_unique<CoherenceChecker>(r.z, acceptance_config(seed));
  return r;
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

void print(int n, const char* what, const Criterion& c) {
  std::printf("criterion %d %-48s %s  worst=%.3e%s%s\n", n, what, c.pass ? "PASS" : "FAIL", c.worst,
              c.note.empty() ? "" : "  first failure: ", c.note.c_str());
}

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 0;
  const auto names = FiniteGroup::builtin_names();
  Criterion c1, c2, c3, c4, c5, c6, c7;

  std::map<std::string, GroupRun> runs;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : names) {
    GroupRun& run = runs[name] = make_run(name, kSeed);
    const Centre& z = *run.z;
    const auto& pool = run.checker->pool();
    for (const auto& a : pool)
      for (const auto& b : pool) {
        if (a.object.dim() * b.object.dim() > 256) continue;
        const Matrix p = z.idempotent(a.object, b.object);
        c1.observe(max_abs_diff(p * p, p), 1e-8, name + " " + a.name + "," + b.name);
      }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c1.require(seconds <= 300, "idempotency sweep took " + std::to_string(seconds) + " s");
  print(1, "idempotent on every pool pair", c1);

  for (const auto& name : names) {
    const GroupRun& run = runs[name];
    const Centre& z = *run.z;
    const auto& g = z.category().group();
    const auto& pool = run.checker->pool();
    std::vector<oracle::YDModule> yd;
    for (const auto& p : pool) yd.push_back(oracle::to_yd(z, p.object));
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = 0; j < pool.size(); ++j) {
        const auto& a = pool[i];
        const auto& b = pool[j];
        if (a.object.dim() * b.object.dim() > 256) continue;
        const std::string where = name + " " + a.name + "," + b.name;
        const auto& sym = run.checker->sym().product(a.object, b.object);
        c2.require(sym.object.dim() == oracle::fibrewise_dimension(yd[i], yd[j]), where + " rank");

        const oracle::YDModule s = oracle::to_yd(z, sym.object);
        const oracle::Embedded f = oracle::fibrewise(g, yd[i], yd[j]);
        c2.observe(oracle::isomorphism_defect(g, s, f.module, oracle::random_intertwiner(g, s, f.module, i * 131 + j)),
                   1e-8, where + " sym");

        const oracle::YDModule c = oracle::to_yd(z, run.checker->conv().product(a.object, b.object).object);
        const oracle::YDModule m = oracle::convolution(g, yd[i], yd[j]);
        c2.observe(oracle::isomorphism_defect(g, c, m, oracle::random_intertwiner(g, c, m, i * 131 + j + 7)), 1e-8,
                   where + " conv");
      }
  }
  print(2, "oracle ranks and gradings agree", c2);

  std::map<std::string, CoherenceReport> reports;
  for (const auto& name : names) reports[name] = runs[name].checker->run(kSuiteAll, name);

  for (const auto& [name, report] : reports) {
    for (const auto& e : report.entries)
      if (starts_with(e.id, "inclusive.")) c3.observe(e.deviation, 1e-9, name + " " + e.id + " " + e.objects);
    const auto& cat = runs[name].z->category();
    double sum = 0;
    for (int i = 0; i < cat.num_simples(); ++i) sum += double(cat.dim(i)) * cat.dim(i) / cat.global_dim();
    c3.observe(std::abs(sum - 1.0), 1e-12, name + " normalisation");
  }
  print(3, "inclusivity composites are identities", c3);

  for (const auto& [name, report] : reports)
    for (const auto& e : report.entries) {
      const std::string where = name + " " + e.id + " " + e.objects;
      if (e.id == "braided.vertical.symmetric")
        c4.observe(e.deviation, 1e-10, where);
      else if (starts_with(e.id, "lax.") || starts_with(e.id, "oplax.") || starts_with(e.id, "braided.") ||
               starts_with(e.id, "morphism.") || starts_with(e.id, "natural."))
        c4.observe(e.deviation, 1e-8, where);
    }
  print(4, "lax, oplax and braided diagrams commute", c4);

  for (const auto& [name, report] : reports)
    for (const auto& e : report.entries)
      if (starts_with(e.id, "lemma.") || starts_with(e.id, "bilinear."))
        c5.observe(e.deviation, 1e-8, name + " " + e.id + " " + e.objects);
  print(5, "lemma suite", c5);

  for (const auto& name : names) {
    const Centre& z = *runs[name].z;
    const int order = z.category().group().order();
    c6.require(global_dimension(z.category().irreps()) == order, name + " sum of squared dimensions");
    c6.require(z.sym_unit().dim() == order, name + " dim Is");
  }
  {
    const FiniteGroup z2 = FiniteGroup::builtin("z2");
    const auto simples = oracle::abelian_simple_yd(z2);
    c6.require(simples.size() == 4, "z2 simple count");
    // Label each simple by (degree, character on the generator) in Z2 x Z2 and
    // check convolution adds labels.
    const int sigma = 1 - z2.identity();
    auto label = [&](int degree, Complex chi) { return std::make_pair(degree == sigma, chi.real() < 0); };
    for (const auto& a : simples)
      for (const auto& b : simples) {
        const auto prod = oracle::convolution(z2, a.module, b.module);
        const auto want = label(z2.multiply(a.degree, b.degree), a.character[sigma] * b.character[sigma]);
        const auto la = label(a.degree, a.character[sigma]), lb = label(b.degree, b.character[sigma]);
        c6.require(want == std::make_pair(la.first != lb.first, la.second != lb.second), "z2 label arithmetic");
        int matches = 0;
        for (const auto& s : simples) {
          if (label(s.degree, s.character[sigma]) != want) continue;
          ++matches;
          c6.observe(oracle::isomorphism_defect(z2, prod, s.module, oracle::random_intertwiner(z2, prod, s.module, 1)),
                     1e-9, "z2 product iso");
        }
        c6.require(matches == 1, "z2 closure");
      }
  }
  print(6, "structural counts", c6);

  for (const auto& name : names) {
    const GroupRun again = make_run(name, kSeed);
    c7.require(again.checker->run(kSuiteAll, name).to_json() == reports[name].to_json(), name + " report differs");
  }
  print(7, "identical reports for identical configs", c7);

  const bool all = c1.pass && c2.pass && c3.pass && c4.pass && c5.pass && c6.pass && c7.pass;
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
