// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "../oracles/oracles.hpp"
#include "eqb/suites.hpp"

using namespace eqb;

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  std::vector<SuiteResult> results;
  double seconds = 0;
};

Timed timed_run(const std::string& suite, const SuiteOptions& o) {
  const auto t0 = Clock::now();
  Timed out{run_suite(suite, o), 0};
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

bool flag(const SuiteCase& c, const char* key) {
  const auto it = c.detail.find(key);
  return it != c.detail.end() && it->is_boolean() && it->get<bool>();
}

std::size_t count_if(const SuiteResult& r, const std::function<bool(const SuiteCase&)>& p) {
  std::size_t n = 0;
  for (const auto& c : r.cases) n += p(c) ? 1 : 0;
  return n;
}

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d %-28s %s  %s\n", id, name, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

}  // namespace

int main() {
  SuiteOptions o;
  o.seed = 1;

  const Timed birk = timed_run("birkhoff", o);
  const SuiteResult& b = birk.results.front();
  {
    const std::size_t ok = count_if(b, [](const SuiteCase& c) { return flag(c, "recovered") && flag(c, "residual_zero"); });
    report(1, "birkhoff recovery", b.cases.size() == 200 && ok == 200 && birk.seconds <= 60,
           ratio(ok, b.cases.size()) + " in " + secs(birk.seconds));
    const std::size_t h0 = count_if(b, [](const SuiteCase& c) { return flag(c, "h0_agrees"); });
    report(2, "h0 oracle equivalence", b.cases.size() == 200 && h0 == 200, ratio(h0, b.cases.size()) + " for m in [-6, 6]");
  }

  const Timed round = timed_run("roundtrip", o);
  const SuiteResult& r = round.results.front();
  const Timed avg = timed_run("averaging", o);
  const SuiteResult& a = avg.results.front();
  {
    const std::size_t ok = count_if(r, [](const SuiteCase& c) { return flag(c, "recovered"); });
    report(3, "classification round trip", r.cases.size() == 600 && ok == 600 && round.seconds <= 120,
           ratio(ok, r.cases.size()) + " over 6 groups in " + secs(round.seconds));

    const std::size_t rt = count_if(r, [](const SuiteCase& c) {
      return flag(c, "stage_identities") && flag(c, "certificates_reverified");
    });
    const std::size_t av = count_if(a, [](const SuiteCase& c) {
      return flag(c, "is_section") && flag(c, "equivariant") && flag(c, "holomorphic") && flag(c, "certificate_reverified");
    });
    report(4, "averaged splittings", rt == r.cases.size() && av == a.cases.size(),
           "round trip " + ratio(rt, r.cases.size()) + ", averaging " + ratio(av, a.cases.size()) + " re-verified");

    std::size_t valid = 0;
    std::size_t invariant = 0;
    for (const SuiteResult* s : {&r, &a}) {
      for (const auto& c : s->cases) {
        if (!flag(c, "validated")) continue;
        ++valid;
        invariant += flag(c, "hn_invariant") ? 1 : 0;
      }
    }
    report(5, "HN invariance", valid == r.cases.size() + a.cases.size() && invariant == valid,
           ratio(invariant, valid) + " validated bundles invariant");
  }

  {
    const Timed par = timed_run("parity", o);
    const SuiteResult& p = par.results.front();
    const auto groups = pgl_groups(60);
    std::size_t agree = 0;
    for (const auto& g : groups) {
      const PGLGroup& pg = *g.group->pgl();
      std::vector<CycMatrix> pre;
      for (std::size_t i = 0; i < pg.preimage->order(); ++i) pre.push_back(pg.preimage->element(i).matrix());
      agree += oracle::has_complement(pre) == g.group->splits() ? 1 : 0;
    }
    std::size_t split = 0;
    for (const auto& g : groups) split += g.group->splits() ? 1 : 0;
    const std::size_t ok = p.pass_count();
    report(6, "extension dichotomy",
           groups.size() >= 10 && agree == groups.size() && p.passed() && p.cases.size() == groups.size(),
           "oracle agrees " + ratio(agree, groups.size()) + ", " + std::to_string(split) + " split, parity checks " +
               ratio(ok, p.cases.size()));
  }

  const Timed sec = timed_run("sections", o);
  {
    const SuiteResult& s = sec.results.front();
    const std::size_t ok = count_if(s, [](const SuiteCase& c) { return flag(c, "transported_agrees"); });
    report(7, "sections consistency", s.cases.size() == 50 && ok == 50 && s.passed(), ratio(ok, s.cases.size()));
  }

  {
    std::size_t same = 0;
    const std::vector<const Timed*> first{&birk, &round, &avg, nullptr, &sec};
    const auto& names = suite_names();
    for (std::size_t k = 0; k < names.size(); ++k) {
      // Parity has no earlier run kept around, so it runs twice here.
      const auto a1 = first[k] ? first[k]->results : run_suite(names[k], o);
      const auto a2 = run_suite(names[k], o);
      same += suite_report(a1, o).dump() == suite_report(a2, o).dump() ? 1 : 0;
    }
    report(8, "determinism", same == names.size(), ratio(same, names.size()) + " suites byte-identical on rerun");
  }

  return failures == 0 ? 0 : 1;
}
