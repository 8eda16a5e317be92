#include "qcong/sweep.hpp"

#include <algorithm>
#include <functional>

#include "qcong/qcomb.hpp"

namespace qcong {

namespace {

struct Task {
  std::string tag;
  std::vector<long long> params;
  std::function<std::vector<VerificationRecord>()> run;
};

std::vector<VerificationRecord> one(VerificationRecord rec) {
  std::vector<VerificationRecord> v;
  v.push_back(std::move(rec));
  return v;
}

VerificationRecord make_rec(const std::string& tag,
                            std::vector<long long> params) {
  VerificationRecord rec;
  rec.theorem = tag;
  rec.params = std::move(params);
  return rec;
}

// The classical families sweep primes only; other values expand to nothing.
void expand_classical(const std::string& tag, long long lo, long long hi,
                      std::vector<Task>& tasks) {
  for (long long v = lo; v <= hi; ++v) {
    const auto p = static_cast<unsigned long>(v);
    if (!is_prime(p)) continue;
    if (tag == "classical11" && p >= 5) {
      tasks.push_back({tag, {v}, [p] { return one(classical_sum_central(p)); }});
    } else if (tag == "classical12" && p >= 5) {
      for (unsigned e = 1; e <= 2; ++e) {
        tasks.push_back({tag,
                         {v, static_cast<long long>(e)},
                         [p, e] { return one(classical_double_binom(p, e)); }});
      }
    } else if (tag == "classical13" && p >= 3) {
      // Odd primes only: at p = 2 the alternating sum is 1, not 0.
      for (unsigned long nodd = 1; nodd <= 5 && nodd + 1 <= p; nodd += 2) {
        tasks.push_back({tag,
                         {static_cast<long long>(nodd), v},
                         [nodd, p] { return one(classical_harmonic(nodd, p)); }});
      }
    }
  }
}

bool expand_tag(const std::string& tag, long long lo, long long hi,
                std::vector<Task>& tasks) {
  using Fn = VerificationRecord (*)(unsigned long);
  static const std::vector<std::pair<std::string, Fn>> kSingle = {
      {"thm11", verify_thm11},   {"eq21", verify_eq21_equiv},
      {"thm12", verify_thm12},   {"thm13", verify_thm13},
      {"eq41", verify_eq41},     {"chu", verify_chu_vandermonde},
      {"id31", verify_identity31}, {"eq38", verify_eq38},
      {"case1", verify_case1},   {"case2", verify_case2},
      {"case3", verify_case3},
  };
  for (const auto& [name, fn] : kSingle) {
    if (tag != name) continue;
    for (long long v = lo; v <= hi; ++v) {
      const auto n = static_cast<unsigned long>(v);
      tasks.push_back({tag, {v}, [fn, n] { return one(fn(n)); }});
    }
    return true;
  }
  if (tag == "lemma32") {
    for (long long v = lo; v <= hi; ++v) {
      const auto n = static_cast<unsigned long>(v);
      tasks.push_back({tag, {v}, [n] { return verify_lemma32_all(n); }});
    }
    return true;
  }
  if (tag == "classical11" || tag == "classical12" || tag == "classical13") {
    expand_classical(tag, lo, hi, tasks);
    return true;
  }
  return false;
}

}  // namespace

const std::vector<std::string>& known_tags() {
  static const std::vector<std::string> kTags = {
      "thm11", "eq21",  "thm12", "thm13", "eq41",
      "chu",   "id31",  "lemma32", "eq38",
      "case1", "case2", "case3",
      "classical11", "classical12", "classical13"};
  return kTags;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  SweepResult out;
  if (cfg.theorems.empty()) {
    out.exit_code = 2;
    out.error = "no theorem tags given";
    return out;
  }
  if (cfg.lo < 1 || cfg.lo > cfg.hi) {
    out.exit_code = 2;
    out.error = "range must satisfy 1 <= A <= B";
    return out;
  }
  if (cfg.jobs < 1) {
    out.exit_code = 2;
    out.error = "jobs must be at least 1";
    return out;
  }
  std::vector<Task> tasks;
  for (const auto& tag : cfg.theorems) {
    if (!expand_tag(tag, cfg.lo, cfg.hi, tasks)) {
      out.exit_code = 2;
      out.error = "unknown theorem tag: " + tag;
      return out;
    }
  }
  std::vector<std::vector<VerificationRecord>> results(tasks.size());
  const auto count = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.jobs)
  for (long long i = 0; i < count; ++i) {
    ScopedDegreeLimit guard(cfg.max_degree);
    try {
      if (cfg.dump_remainders) {
        ScopedRemainderCapture capture;
        results[i] = tasks[i].run();
      } else {
        results[i] = tasks[i].run();
      }
    } catch (const DegreeGuardExceeded&) {
      VerificationRecord rec = make_rec(tasks[i].tag, tasks[i].params);
      rec.status = Status::fails;
      rec.remainder_digest = "degree-guard";
      results[i] = one(std::move(rec));
    } catch (const std::exception&) {
      VerificationRecord rec = make_rec(tasks[i].tag, tasks[i].params);
      rec.status = Status::fails;
      rec.remainder_digest = "internal-error";
      results[i] = one(std::move(rec));
    }
  }
  for (auto& group : results) {
    for (auto& rec : group) out.records.push_back(std::move(rec));
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const VerificationRecord& a, const VerificationRecord& b) {
              if (a.theorem != b.theorem) return a.theorem < b.theorem;
              return a.params < b.params;
            });
  for (const auto& rec : out.records) {
    if (rec.status == Status::fails) out.exit_code = 1;
  }
  return out;
}

}  // namespace qcong
