#include "fqsum/hypergeometric.hpp"
#include "fqsum/identities.hpp"
#include "fqsum/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;
using namespace fqsum;

namespace {

// One context per q so the binomial table is built once per field.
const SumContext& context(std::uint64_t q) {
  static std::mutex lock;
  static std::map<std::uint64_t, std::unique_ptr<SumContext>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[q];
  if (!slot) {
    auto [p, r] = prime_power_decompose(q);
    slot = std::make_unique<SumContext>(build_field(p, r));
  }
  return *slot;
}

Character character(const SumContext& ctx, std::int64_t e) {
  if (e < 0 || e >= static_cast<std::int64_t>(ctx.order()))
    throw CharacterError("character exponent out of range: " + std::to_string(e));
  return ctx.character(e);
}

std::string value(const CycInt& v) { return to_json(v).dump(); }

VerifyOptions options(bool sampled, std::uint64_t samples, std::uint64_t seed, unsigned jobs,
                      std::size_t max_counterexamples, bool mutated) {
  if (jobs == 0) throw std::invalid_argument("jobs must be positive");
  VerifyOptions o;
  o.mode = sampled ? VerifyMode::Sampled : VerifyMode::Exhaustive;
  o.samples = samples;
  o.seed = seed;
  o.jobs = jobs;
  o.max_counterexamples = max_counterexamples;
  o.mutated = mutated;
  return o;
}

}  // namespace

PYBIND11_MODULE(_fqsum, m) {
  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
  py::register_exception<CharacterError>(m, "CharacterError", PyExc_ValueError);
  py::register_exception<UnknownIdentityError>(m, "UnknownIdentityError", PyExc_KeyError);

  m.def("field_info", [](std::uint64_t q) { return field_description(context(q).field()).dump(); }, py::arg("q"));

  m.def("jacobi", [](std::uint64_t q, std::int64_t a, std::int64_t b) {
    const SumContext& ctx = context(q);
    return value(jacobi_sum(character(ctx, a), character(ctx, b)));
  }, py::arg("q"), py::arg("A"), py::arg("B"));

  m.def("binom", [](std::uint64_t q, std::int64_t a, std::int64_t b) {
    const SumContext& ctx = context(q);
    return value(ctx.binom(character(ctx, a), character(ctx, b)));
  }, py::arg("q"), py::arg("A"), py::arg("B"));

  m.def("f21", [](std::uint64_t q, std::int64_t a, std::int64_t b, std::int64_t c, std::uint32_t x,
                  const std::string& form) {
    const SumContext& ctx = context(q);
    const Hyp2F1Params p{character(ctx, a), character(ctx, b), character(ctx, c), ctx.element(x)};
    if (form == "point") return value(f21_point_sum(p));
    if (form == "char") return value(f21_char_sum(p));
    throw std::invalid_argument("form must be 'point' or 'char'");
  }, py::arg("q"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("x"), py::arg("form") = "point");

  m.def("f1", [](std::uint64_t q, std::int64_t a, std::int64_t b, std::int64_t bp, std::int64_t c, std::uint32_t x,
                 std::uint32_t y, const std::string& form) {
    const SumContext& ctx = context(q);
    const AppellF1Params p{character(ctx, a), character(ctx, b), character(ctx, bp), character(ctx, c),
                           ctx.element(x), ctx.element(y)};
    if (form == "point") return value(appell_f1_point_sum(p));
    if (form == "char") return value(appell_f1_char_sum(p));
    throw std::invalid_argument("form must be 'point' or 'char'");
  }, py::arg("q"), py::arg("A"), py::arg("B"), py::arg("Bp"), py::arg("C"), py::arg("x"), py::arg("y"),
     py::arg("form") = "point");

  m.def("identities", [] {
    std::vector<std::string> ids;
    for (const IdentityCase& c : registry()) ids.push_back(c.id);
    return ids;
  });

  m.def("verify", [](const std::string& id, std::uint64_t q, bool sampled, std::uint64_t samples, std::uint64_t seed,
                     unsigned jobs, std::size_t max_counterexamples, bool mutated) {
    const VerifyOptions o = options(sampled, samples, seed, jobs, max_counterexamples, mutated);
    const SumContext& ctx = context(q);
    py::gil_scoped_release release;
    return to_json(verify(id, ctx, o)).dump();
  }, py::arg("id"), py::arg("q"), py::arg("sampled") = false, py::arg("samples") = 10000, py::arg("seed") = 0,
     py::arg("jobs") = 1, py::arg("max_counterexamples") = 10, py::arg("mutated") = false);

  m.def("verify_all", [](std::uint64_t q, bool sampled, std::uint64_t samples, std::uint64_t seed, unsigned jobs,
                         std::size_t max_counterexamples, bool mutated) {
    const VerifyOptions o = options(sampled, samples, seed, jobs, max_counterexamples, mutated);
    const SumContext& ctx = context(q);
    std::vector<std::string> out;
    {
      py::gil_scoped_release release;
      for (const VerifyReport& r : verify_all(ctx, o)) out.push_back(to_json(r).dump());
    }
    return out;
  }, py::arg("q"), py::arg("sampled") = false, py::arg("samples") = 10000, py::arg("seed") = 0, py::arg("jobs") = 1,
     py::arg("max_counterexamples") = 10, py::arg("mutated") = false);
}
