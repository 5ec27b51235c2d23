// Acceptance gate: one PASS/FAIL line per criterion. Tolerances, trial
// counts and time limits are pinned here, independently of the thresholds
// the suites declare, so loosening a suite cannot turn a line green.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "miquel/cli.hpp"
#include "miquel/verify.hpp"

using namespace miquel;

namespace {

constexpr std::uint64_t kSeed = kDefaultSeed;

struct Pin {
  std::string suite;
  std::string claim;
  /// Residuals must stay strictly below this.
  double tol;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<std::pair<std::string, int>> runs;  // suite, trials
  std::vector<Pin> pins;
  /// Seconds; 0 means no limit.
  double limit;
};

const std::vector<Criterion> kCriteria = {
    {1, "Miquel concurrency", {{"theorem1", 1000}},
     {{"theorem1", "miquel-concurrency", 1e-8}}, 1.0},
    {2, "Miquel equations and predicted angles", {{"theorem2", 500}, {"lemma2", 500}},
     {{"theorem2", "A+X=BPC", 1e-9}, {"theorem2", "B+Y=CPA", 1e-9}, {"theorem2", "C+Z=APB", 1e-9},
      {"lemma2", "pedal-angles", 1e-8}, {"lemma2", "family-angles", 1e-8}},
     1.0},
    {3, "eleven points with similar Miquel triangles", {{"theorem4", 50}},
     {{"theorem4", "eleven-distinct-points", 0.5}, {"theorem4", "interior-angle-match", 1e-7},
      {"theorem4", "exterior-angle-match", 1e-7}},
     5.0},
    {4, "role transformations O, H, L, Brocard",
     {{"theorem5", 100}, {"theorem6", 100}, {"theorem7", 100}, {"theorem8", 100}},
     {{"theorem5", "O->orthocenter", 1e-8}, {"theorem6", "H->incenter (acute)", 1e-8},
      {"theorem6", "H->excenter (obtuse)", 1e-8}, {"theorem7", "incenter->circumcenter", 1e-8},
      {"theorem7", "excenter->circumcenter", 1e-8}, {"theorem8", "first-brocard-angles", 1e-8},
      {"theorem8", "second-brocard-angles", 1e-8}},
     2.0},
    {5, "median, arc and tangency conditions", {{"theorem9", 100}, {"theorem10", 100}, {"theorem11", 100}},
     {{"theorem9", "S_A-on-median-of-X", 1e-7}, {"theorem9", "acute: M_X E = E F", 1e-7},
      {"theorem9", "obtuse: X E = E F", 1e-7}, {"theorem10", "isosceles: ZYX = XZY = A", 1e-7},
      {"theorem10", "on-circle-YZL", 1e-7}, {"theorem10", "XY-XZ-tangent", 1e-7},
      {"theorem10", "arc-side", 0.5}, {"theorem11", "P=S_X", 1e-7}},
     0.0},
    {6, "isogonal conjugacy", {{"theorem12", 200}, {"theorem13", 100}},
     {{"theorem12", "isogonal(S_v)=M_v", 1e-8}, {"theorem12", "obtuse-vertex-covered", 0.5},
      {"theorem13", "CBT=QBA, BAQ=TAC, ACT=QCB", 1e-8}},
     0.0},
    {7, "Miquel chains", {{"theorem14", 50}, {"theorem15", 50}, {"corollary4", 50}},
     {{"theorem14", "mod3 (pedal chains)", 1e-6}, {"theorem14", "mod3 (rotated chains)", 1e-6},
      {"theorem15", "brocard-fixed", 1e-7}, {"corollary4", "O->H->L cycle", 0.5},
      {"corollary4", "S->M->Q cycle", 0.5}},
     5.0},
    {8, "Simson collinearity", {{"simson", 200}}, {{"simson", "collinearity", 1e-9}}, 0.0},
    {9, "containment parity", {{"lemma1", 400}}, {{"lemma1", "containment-parity", 0.5}}, 0.0},
};

const Claim* find(const std::vector<VerifyReport>& reports, const std::string& suite, const std::string& claim) {
  for (const VerifyReport& r : reports) {
    if (r.suite != suite) continue;
    for (const Claim& c : r.claims) {
      if (c.name == claim) return &c;
    }
  }
  return nullptr;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void line(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d  %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
}

char buf[512];

bool check(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<VerifyReport> reports;
  for (const auto& [suite, trials] : c.runs) reports.push_back(run_suite(suite, kSeed, trials));
  const double elapsed = seconds_since(t0);

  bool pass = true;
  std::string detail = c.title + ":";
  for (const VerifyReport& r : reports) {
    if (!r.passed()) {
      pass = false;
      detail += " suite " + r.suite + " failed;";
    }
  }
  for (const Pin& p : c.pins) {
    const Claim* claim = find(reports, p.suite, p.claim);
    if (claim == nullptr) {
      pass = false;
      detail += " missing " + p.suite + "/" + p.claim + ";";
      continue;
    }
    const bool ok = claim->checked > 0 && claim->max_residual < p.tol;
    pass = pass && ok;
    std::snprintf(buf, sizeof buf, " %s %.1e<%.0e%s", p.claim.c_str(), claim->max_residual, p.tol,
                  ok ? "" : "(!)");
    detail += buf;
  }
  if (c.limit > 0) {
    const bool fast = elapsed < c.limit;
    pass = pass && fast;
    std::snprintf(buf, sizeof buf, "; %.2f s (limit %.0f s)", elapsed, c.limit);
  } else {
    std::snprintf(buf, sizeof buf, "; %.2f s", elapsed);
  }
  detail += buf;
  line(c.id, pass, detail);
  return pass;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_command(args, out, err);
  return out.str();
}

bool determinism() {
  const std::vector<std::string> args{"miquel", "verify", "--suite", "all", "--seed", "7"};
  const std::vector<std::string> json{"miquel", "verify", "--suite", "all", "--seed", "7", "--json"};
  const auto t0 = std::chrono::steady_clock::now();
  int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  const std::string a = run_cli(args, c1);
  const std::string b = run_cli(args, c2);
  const double elapsed = seconds_since(t0);
  const std::string ja = run_cli(json, c3);
  const std::string jb = run_cli(json, c4);
  const bool same = a == b && ja == jb && !a.empty();
  const bool ok = c1 == kExitOk && c2 == kExitOk && c3 == kExitOk && c4 == kExitOk;
  const double per_run = elapsed / 2;
  const bool pass = same && ok && per_run < 30.0;
  std::snprintf(buf, sizeof buf,
                "determinism: text and json reports %s, exit %d/%d, full suite %.2f s (limit 30 s)",
                same ? "byte-identical" : "DIFFER", c1, c2, per_run);
  line(10, pass, buf);
  return pass;
}

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : kCriteria) failed += !check(c);
  failed += !determinism();
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
