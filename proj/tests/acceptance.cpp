// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "finring/cli.hpp"
#include "finring/ring_spec.hpp"
#include "finring/verifier.hpp"

using namespace finring;

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock limits in seconds.
constexpr double kRadicalPerRing = 1.0;
constexpr double kJacobsonTotal = 5.0;
constexpr double kClineTotal = 60.0;
constexpr double kCleanTotal = 60.0;
constexpr double kCornerTotal = 120.0;

// Registry plus a few larger rings so the time limits mean something.
std::vector<std::string> rings_up_to(std::size_t max_order) {
  std::vector<std::string> specs = default_registry();
  for (const char* extra : {"zmod:64", "tri:2:zmod:4", "prod:zmod:4,tri:2:zmod:2", "mat:2:zmod:3",
                            "zmod:256"})
    specs.emplace_back(extra);
  std::vector<std::string> out;
  for (const auto& s : specs)
    if (parse_ring_spec(s)->order() <= max_order) out.push_back(s);
  return out;
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void add(const VerificationReport& r) {
    checked += r.cases_checked;
    failures += r.failures.size();
    if (first_failure.empty() && !r.failures.empty()) {
      first_failure = r.theorem_id + " on " + r.ring + ": " + r.failures.front().witness;
    }
  }
};

Tally run_all(const std::vector<TheoremId>& ids, const std::vector<std::string>& specs) {
  Tally t;
  for (const auto& spec : specs) {
    const RingPtr ring = parse_ring_spec(spec);
    for (TheoremId id : ids) {
      t.add(run_theorem(id, ring));
    }
  }
  return t;
}

int failed = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

std::string summary(const Tally& t, double seconds, double limit) {
  std::ostringstream s;
  s << "checked=" << t.checked << " failures=" << t.failures << " time=" << seconds
    << "s limit=" << limit << "s";
  if (!t.first_failure.empty()) s << " first: " << t.first_failure;
  return s.str();
}

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
  try {
    {
      double worst = 0;
      const auto start = Clock::now();
      Tally t;
      for (const auto& spec : rings_up_to(256)) {
        const auto ring_start = Clock::now();
        t.add(run_theorem(TheoremId::RADICAL_CHAIN, parse_ring_spec(spec)));
        worst = std::max(worst, since(ring_start));
      }
      std::ostringstream d;
      d << "checked=" << t.checked << " failures=" << t.failures << " time=" << since(start)
        << "s slowest_ring=" << worst << "s limit=" << kRadicalPerRing << "s per ring";
      report(1, "radical chain", t.failures == 0 && t.checked > 0 && worst < kRadicalPerRing,
             d.str());
    }
    {
      const auto start = Clock::now();
      const Tally t = run_all({TheoremId::JACOBSON_LEMMA}, default_registry());
      const double secs = since(start);
      report(2, "Jacobson's lemma", t.failures == 0 && t.checked > 0 && secs < kJacobsonTotal,
             summary(t, secs, kJacobsonTotal));
    }
    {
      const auto start = Clock::now();
      const Tally t = run_all({TheoremId::CLINE_D, TheoremId::CLINE_GD, TheoremId::CLINE_PD,
                               TheoremId::VARIANT_COINCIDENCE},
                              rings_up_to(81));
      const double secs = since(start);
      report(3, "Cline's formula (D, gD, pD) and variant coincidence",
             t.failures == 0 && t.checked > 0 && secs < kClineTotal,
             summary(t, secs, kClineTotal));
    }
    {
      const auto start = Clock::now();
      const Tally t = run_all({TheoremId::STRONGLY_CLEAN_TRANSFER, TheoremId::ONE_MINUS_CLEAN},
                              rings_up_to(64));
      const double secs = since(start);
      report(4, "strongly clean transfer and 1-ab wrapper",
             t.failures == 0 && t.checked > 0 && secs < kCleanTotal,
             summary(t, secs, kCleanTotal));
    }
    {
      const Tally t = run_all({TheoremId::PSEUDO_ONE_MINUS},
                              {"zmod:4", "zmod:6", "zmod:8", "zmod:9", "zmod:12", "tri:2:zmod:2",
                               "mat:2:zmod:2"});
      report(5, "pseudo-Drazin 1-ab transfer", t.failures == 0 && t.checked > 0,
             "checked=" + std::to_string(t.checked) + " failures=" + std::to_string(t.failures) +
                 (t.first_failure.empty() ? "" : " first: " + t.first_failure));
    }
    {
      const auto start = Clock::now();
      const Tally t = run_all({TheoremId::CORNER_CLEAN, TheoremId::CORNER_PI_REGULAR,
                               TheoremId::CORNER_QUASIPOLAR, TheoremId::CORNER_PSEUDOPOLAR},
                              rings_up_to(64));
      const double secs = since(start);
      report(6, "corner equivalences", t.failures == 0 && t.checked > 0 && secs < kCornerTotal,
             summary(t, secs, kCornerTotal));
    }
    {
      const Tally t = run_all({TheoremId::DECOMP_EQUIV_1_1, TheoremId::DECOMP_EQUIV_1_2,
                               TheoremId::DECOMP_EQUIV_1_3, TheoremId::LEMMA_S_SHARP},
                              rings_up_to(81));
      report(7, "decomposition equivalences and s# lemma", t.failures == 0 && t.checked > 0,
             "checked=" + std::to_string(t.checked) + " failures=" + std::to_string(t.failures) +
                 (t.first_failure.empty() ? "" : " first: " + t.first_failure));
    }
    {
      const Tally t = run_all({TheoremId::UNIQUENESS}, rings_up_to(256));
      report(8, "uniqueness of Drazin-type inverses", t.failures == 0 && t.checked > 0,
             "checked=" + std::to_string(t.checked) + " failures=" + std::to_string(t.failures) +
                 (t.first_failure.empty() ? "" : " first: " + t.first_failure));
    }
    {
      const std::vector<std::string> args{"verify", "--theorem", "all", "--ring", "registry",
                                          "--json", "-"};
      std::ostringstream out1, out2, err;
      const int c1 = cli::dispatch(args, out1, err);
      const int c2 = cli::dispatch(args, out2, err);
      const bool same = out1.str() == out2.str();
      report(9, "deterministic verify --theorem all --ring registry --json",
             c1 == 0 && c2 == 0 && same && !out1.str().empty(),
             "exit=" + std::to_string(c1) + "," + std::to_string(c2) +
                 " bytes=" + std::to_string(out1.str().size()) +
                 (same ? " identical" : " differ"));
    }
  } catch (const std::exception& ex) {
    std::printf("FAIL acceptance aborted: %s\n", ex.what());
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
