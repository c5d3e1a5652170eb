#include "fqsum/identities.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace fqsum {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// SplitMix64 stream; each sample gets its own stream so that sample i is a
// function of (seed, id, i) alone.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() { return mix64(state_ += 0x9e3779b97f4a7c15ULL); }
  std::uint32_t uniform(std::uint32_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return static_cast<std::uint32_t>(v % bound);
  }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool allowed(ElementDomain domain, std::uint32_t index) {
  // Enumeration index 0 is zero, index 1 is g^0 = 1.
  switch (domain) {
    case ElementDomain::Full: return true;
    case ElementDomain::NotOne: return index != 1;
    case ElementDomain::NotZeroOne: return index > 1;
  }
  return true;
}

struct Axis {
  ParamKind kind;
  ElementDomain domain;
  std::uint32_t range;                 // full range before restriction
  std::vector<std::uint32_t> values;   // allowed values in increasing order
};

std::vector<Axis> axes_for(const IdentityCase& id, std::uint32_t q) {
  std::vector<Axis> axes;
  for (const ParamSpec& p : id.params) {
    Axis a{p.kind, p.domain, p.kind == ParamKind::Character ? q - 1 : q, {}};
    for (std::uint32_t v = 0; v < a.range; ++v) {
      if (p.kind == ParamKind::Character || allowed(p.domain, v)) a.values.push_back(v);
    }
    axes.push_back(std::move(a));
  }
  return axes;
}

struct WorkerResult {
  std::uint64_t failures = 0;
  std::uint64_t not_divisible = 0;
  std::vector<Counterexample> counterexamples;
};

class Checker {
 public:
  Checker(const IdentityCase& id, const SumContext& ctx, const VerifyOptions& opts)
      : id_(id), ctx_(ctx), opts_(opts), axes_(axes_for(id, ctx.q())),
        divisor_(boost::multiprecision::pow(BigInt(ctx.order()), id.clearing_power)),
        stream_base_(mix64(opts.seed ^ fnv1a(id.id))) {}

  std::vector<std::uint32_t> decode(std::uint64_t ordinal) const {
    std::vector<std::uint32_t> values(axes_.size());
    for (std::size_t i = axes_.size(); i-- > 0;) {
      const auto& vals = axes_[i].values;
      values[i] = vals[ordinal % vals.size()];
      ordinal /= vals.size();
    }
    return values;
  }

  std::vector<std::uint32_t> sample(std::uint64_t i) const {
    SampleStream stream(mix64(stream_base_ ^ mix64(i + 1)));
    std::vector<std::uint32_t> values(axes_.size());
    for (std::size_t k = 0; k < axes_.size(); ++k) {
      const Axis& a = axes_[k];
      std::uint32_t v;
      do v = stream.uniform(a.range);
      while (a.kind == ParamKind::Element && !allowed(a.domain, v));
      values[k] = v;
    }
    return values;
  }

  void check(std::uint64_t ordinal, WorkerResult& out) const {
    const std::vector<std::uint32_t> values =
        opts_.mode == VerifyMode::Exhaustive ? decode(ordinal) : sample(ordinal);
    std::vector<Character> chars;
    std::vector<FieldElement> elems;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (axes_[k].kind == ParamKind::Character) {
        chars.push_back(ctx_.character(values[k]));
      } else {
        elems.push_back(ctx_.element(values[k]));
      }
    }
    const Args args(ctx_, chars, elems, opts_.mutated);
    Counterexample cx{ordinal, values, std::nullopt, std::nullopt, {}};
    try {
      CycInt lhs = id_.lhs(args);
      CycInt rhs = id_.rhs(args);
      if (id_.divisible != DivisibleSide::None) {
        try {
          (void)(id_.divisible == DivisibleSide::Lhs ? lhs : rhs).exact_div_int(divisor_);
        } catch (const NotDivisibleError& e) {
          cx.reason = std::string("not-divisible: ") + e.what();
          ++out.not_divisible;
        }
      }
      if (cx.reason.empty() && !(lhs == rhs)) cx.reason = "mismatch";
      cx.lhs = std::move(lhs);
      cx.rhs = std::move(rhs);
    } catch (const std::exception& e) {
      cx.reason = std::string("error: ") + e.what();
    }
    if (cx.reason.empty()) return;
    ++out.failures;
    if (out.counterexamples.size() < opts_.max_counterexamples) out.counterexamples.push_back(std::move(cx));
  }

  std::uint64_t total() const {
    return opts_.mode == VerifyMode::Exhaustive ? id_.domain_size(ctx_.q()) : opts_.samples;
  }

 private:
  const IdentityCase& id_;
  const SumContext& ctx_;
  const VerifyOptions& opts_;
  std::vector<Axis> axes_;
  BigInt divisor_;
  std::uint64_t stream_base_;
};

}  // namespace

std::size_t IdentityCase::character_count() const {
  return static_cast<std::size_t>(
      std::count_if(params.begin(), params.end(), [](const ParamSpec& p) { return p.kind == ParamKind::Character; }));
}

std::size_t IdentityCase::element_count() const { return params.size() - character_count(); }

std::uint64_t IdentityCase::domain_size(std::uint32_t q) const {
  std::uint64_t total = 1;
  for (const Axis& a : axes_for(*this, q)) total *= a.values.size();
  return total;
}

const IdentityCase& find_identity(std::string_view id) {
  for (const IdentityCase& c : registry()) {
    if (c.id == id) return c;
  }
  throw UnknownIdentityError(id);
}

VerifyReport verify(const IdentityCase& identity, const SumContext& ctx, const VerifyOptions& options) {
  if (options.mode == VerifyMode::Sampled && options.samples == 0) {
    throw std::invalid_argument("sampled verification needs at least one sample");
  }
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.id = identity.id;
  report.q = ctx.q();
  report.mode = options.mode;
  if (options.mode == VerifyMode::Sampled) report.seed = options.seed;
  report.mutated = options.mutated;
  for (const ParamSpec& p : identity.params) report.param_names.push_back(p.name);

  const Checker checker(identity, ctx, options);
  const std::uint64_t total = checker.total();
  report.cases = total;

  const unsigned jobs = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(options.jobs, total)));
  std::vector<WorkerResult> results(jobs);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / jobs;
    const std::uint64_t end = total * (w + 1) / jobs;
    for (std::uint64_t i = begin; i < end; ++i) checker.check(i, results[w]);
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(run, w);
    for (auto& t : workers) t.join();
  }
  // Chunks are contiguous and in order, so concatenation preserves binding order.
  for (WorkerResult& r : results) {
    report.failures += r.failures;
    report.not_divisible += r.not_divisible;
    for (Counterexample& cx : r.counterexamples) {
      if (report.counterexamples.size() < options.max_counterexamples) {
        report.counterexamples.push_back(std::move(cx));
      }
    }
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerifyReport verify(std::string_view id, const SumContext& ctx, const VerifyOptions& options) {
  return verify(find_identity(id), ctx, options);
}

std::vector<VerifyReport> verify_all(const SumContext& ctx, const VerifyOptions& options) {
  std::vector<VerifyReport> reports;
  for (const IdentityCase& identity : registry()) {
    try {
      reports.push_back(verify(identity, ctx, options));
    } catch (const std::exception& e) {
      VerifyReport r;
      r.id = identity.id;
      r.q = ctx.q();
      r.mode = options.mode;
      r.error = e.what();
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

}  // namespace fqsum
