#include "cli.hpp"

#include "fqsum/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fqsum::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldOptions {
  std::optional<std::uint32_t> p;
  std::uint32_t r = 1;
  std::optional<std::uint64_t> q;
  std::uint32_t cap = kDefaultTableCap;
};

void add_field_options(CLI::App* cmd, FieldOptions& f) {
  cmd->add_option("-p", f.p, "Characteristic");
  cmd->add_option("-r", f.r, "Extension degree")->capture_default_str();
  cmd->add_option("-q", f.q, "Field size (prime power)");
  cmd->add_option("--cap", f.cap, "Largest field size for table construction")->capture_default_str();
}

std::shared_ptr<const FieldTable> make_field(const FieldOptions& f) {
  if (f.q && f.p) throw UsageError("give either -q or -p/-r, not both");
  if (f.q) {
    auto [p, r] = prime_power_decompose(*f.q);
    return build_field(p, r, f.cap);
  }
  if (!f.p) throw UsageError("a field is required: -p P [-r R] or -q Q");
  return build_field(*f.p, f.r, f.cap);
}

std::vector<std::uint32_t> split_numbers(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed number '" + item + "'");
    }
    if (used != item.size()) throw UsageError("malformed number '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

// Either an enumeration index ("3") or a low-to-high coefficient vector ("1,2").
FieldElement parse_element(const FieldTable& f, const std::string& text, const char* name) {
  const std::vector<std::uint32_t> nums = split_numbers(text);
  if (text.find(',') != std::string::npos) return f.from_coeffs(nums);
  if (nums.size() != 1) throw UsageError(std::string("element ") + name + " is required");
  return f.from_index(nums[0]);
}

Character parse_character(const FieldTable& f, const std::optional<std::int64_t>& e, const char* name) {
  if (!e) throw UsageError(std::string("character ") + name + " is required");
  if (*e < 0 || *e >= static_cast<std::int64_t>(f.order())) {
    throw UsageError(std::string("character exponent ") + name + " must lie in [0, q-2]");
  }
  return Character(f, *e);
}

struct EvalOptions {
  std::string kind;
  FieldOptions field;
  std::optional<std::int64_t> A, B, Bp, C;
  std::string x, y;
  std::string form = "point";
  std::string format = "json";
};

Json value_document(const CycInt& v) {
  Json j;
  j["value"] = to_json(v);
  if (auto m = v.as_integer()) j["integer"] = m->str();
  return j;
}

int cmd_field_info(const FieldOptions& fo, const std::string& format, std::ostream& out) {
  auto field = make_field(fo);
  if (format == "human") {
    const Json d = field_description(*field);
    out << "F_" << field->q() << " = F_" << field->p() << "[x]/(" << d["modulus"].dump() << ")"
        << "  generator " << d["generator_coeffs"].dump() << "  characters " << field->order()
        << (field->degenerate() ? "  (degenerate: trivial character group)" : "") << "\n";
  } else {
    out << field_description(*field).dump() << "\n";
  }
  return kOk;
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  auto field = make_field(o.field);
  const FieldTable& f = *field;
  Json params;
  CycInt v;
  if (o.kind == "jacobi" || o.kind == "binom") {
    const Character A = parse_character(f, o.A, "A");
    const Character B = parse_character(f, o.B, "B");
    params = Json{{"A", A.exponent()}, {"B", B.exponent()}};
    v = o.kind == "jacobi" ? jacobi_sum(A, B) : binom(A, B);
  } else if (o.kind == "f21") {
    const Hyp2F1Params p{parse_character(f, o.A, "A"), parse_character(f, o.B, "B"),
                         parse_character(f, o.C, "C"), parse_element(f, o.x, "x")};
    params = Json{{"A", p.A.exponent()}, {"B", p.B.exponent()}, {"C", p.C.exponent()}, {"x", f.index_of(p.x)}};
    v = o.form == "char" ? f21_char_sum(p) : f21_point_sum(p);
  } else {
    const AppellF1Params p{parse_character(f, o.A, "A"), parse_character(f, o.B, "B"),
                           parse_character(f, o.Bp, "Bp"), parse_character(f, o.C, "C"),
                           parse_element(f, o.x, "x"), parse_element(f, o.y, "y")};
    params = Json{{"A", p.A.exponent()}, {"B", p.B.exponent()}, {"Bp", p.Bp.exponent()},
                  {"C", p.C.exponent()}, {"x", f.index_of(p.x)}, {"y", f.index_of(p.y)}};
    v = o.form == "char" ? appell_f1_char_sum(p) : appell_f1_point_sum(p);
  }
  if (o.format == "human") {
    out << v.to_string() << "\n";
    return kOk;
  }
  Json doc;
  doc["kind"] = o.kind;
  doc["q"] = f.q();
  doc["form"] = o.form;
  doc["params"] = std::move(params);
  const Json value = value_document(v);
  for (const auto& [key, val] : value.items()) doc[key] = val;
  out << doc.dump() << "\n";
  return kOk;
}

int cmd_table(const std::string& kind, const FieldOptions& fo, const std::string& path, std::ostream& out) {
  auto field = make_field(fo);
  const FieldTable& f = *field;
  std::ofstream file;
  std::ostream* sink = &out;
  if (!path.empty()) {
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path);
    sink = &file;
  }
  const SumContext ctx(field);
  const std::uint32_t n = f.order();
  const std::uint32_t q = f.q();
  auto emit = [&](Json row, const CycInt& v) {
    const Json value = value_document(v);
    for (const auto& [key, val] : value.items()) row[key] = val;
    *sink << row.dump() << "\n";
  };
  if (kind == "jacobi" || kind == "binom") {
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        const Character A(f, a), B(f, b);
        emit(Json{{"A", a}, {"B", b}}, kind == "jacobi" ? jacobi_sum(A, B) : ctx.binom(A, B));
      }
    }
  } else if (kind == "f21") {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          for (std::uint32_t x = 0; x < q; ++x)
            emit(Json{{"A", a}, {"B", b}, {"C", c}, {"x", x}},
                 ctx.f21(Character(f, a), Character(f, b), Character(f, c), f.from_index(x)));
  } else {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t bp = 0; bp < n; ++bp)
          for (std::uint32_t c = 0; c < n; ++c)
            for (std::uint32_t x = 0; x < q; ++x)
              for (std::uint32_t y = 0; y < q; ++y)
                emit(Json{{"A", a}, {"B", b}, {"Bp", bp}, {"C", c}, {"x", x}, {"y", y}},
                     ctx.appell(Character(f, a), Character(f, b), Character(f, bp), Character(f, c),
                                f.from_index(x), f.from_index(y)));
  }
  return kOk;
}

struct VerifyCliOptions {
  std::vector<std::string> ids;
  bool all = false;
  std::vector<std::uint64_t> qs;
  FieldOptions field;
  bool exhaustive = false;
  bool sampled = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t max_counterexamples = 10;
  std::string format = "json";
  std::string out;
  bool timing = false;
  bool mutated = false;
};

int cmd_verify(const VerifyCliOptions& o, std::ostream& out) {
  if (o.exhaustive && o.sampled) throw UsageError("--exhaustive and --sampled are exclusive");
  if (o.all == !o.ids.empty()) throw UsageError("give identity ids or --all");
  if (o.jobs == 0) throw UsageError("--jobs must be positive");
  if (o.sampled && o.samples == 0) throw UsageError("--samples must be positive");
  for (const std::string& id : o.ids) (void)find_identity(id);

  std::vector<std::shared_ptr<const FieldTable>> fields;
  if (!o.qs.empty()) {
    if (o.field.p) throw UsageError("give either -q or -p/-r, not both");
    for (std::uint64_t q : o.qs) {
      auto [p, r] = prime_power_decompose(q);
      fields.push_back(build_field(p, r, o.field.cap));
    }
  } else {
    fields.push_back(make_field(o.field));
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + o.out);
    sink = &file;
  }

  VerifyOptions opts;
  opts.mode = o.sampled ? VerifyMode::Sampled : VerifyMode::Exhaustive;
  opts.samples = o.samples;
  opts.seed = o.seed;
  opts.jobs = o.jobs;
  opts.max_counterexamples = o.max_counterexamples;
  opts.mutated = o.mutated;

  int code = kOk;
  for (const auto& field : fields) {
    const SumContext ctx(field);
    std::vector<const IdentityCase*> selected;
    if (o.all) {
      for (const IdentityCase& c : registry()) selected.push_back(&c);
    } else {
      for (const std::string& id : o.ids) selected.push_back(&find_identity(id));
    }
    for (const IdentityCase* c : selected) {
      VerifyReport report;
      try {
        report = verify(*c, ctx, opts);
      } catch (const std::exception& e) {
        report.id = c->id;
        report.q = ctx.q();
        report.mode = opts.mode;
        report.error = e.what();
      }
      if (o.format == "human") {
        *sink << to_human(report) << "\n";
      } else {
        *sink << to_json(report, o.timing).dump() << "\n";
      }
      sink->flush();
      if (report.error) {
        code = kInternal;
      } else if (!report.passed() && code == kOk) {
        code = kCounterexample;
      }
    }
  }
  return code;
}

int cmd_list(std::ostream& out) {
  for (const IdentityCase& c : registry()) {
    Json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    Json params = Json::array();
    for (const ParamSpec& p : c.params) params.push_back(p.name);
    j["params"] = std::move(params);
    j["clearing_power"] = c.clearing_power;
    j["mutation"] = c.mutation;
    out << j.dump() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact character sums over finite fields and identity verification", "fqsum"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "Output format")->check(CLI::IsMember({"json", "human"}))->capture_default_str();
  };

  FieldOptions info_field;
  auto* info = app.add_subcommand("field-info", "Describe the constructed field");
  add_field_options(info, info_field);
  add_format(info, format);

  EvalOptions eval;
  auto* ev = app.add_subcommand("eval", "Evaluate one character sum");
  ev->add_option("kind", eval.kind, "jacobi | binom | f21 | f1")
      ->required()
      ->check(CLI::IsMember({"jacobi", "binom", "f21", "f1"}));
  add_field_options(ev, eval.field);
  ev->add_option("-A", eval.A, "Exponent of A");
  ev->add_option("-B", eval.B, "Exponent of B");
  ev->add_option("--Bp", eval.Bp, "Exponent of B' (also accepted as -Bp)");
  ev->add_option("-C", eval.C, "Exponent of C");
  ev->add_option("-x", eval.x, "Element: enumeration index or comma-separated coefficients");
  ev->add_option("-y", eval.y, "Element: enumeration index or comma-separated coefficients");
  ev->add_option("--form", eval.form, "Evaluator for f21/f1")->check(CLI::IsMember({"point", "char"}))->capture_default_str();
  add_format(ev, eval.format);

  VerifyCliOptions vo;
  auto* ver = app.add_subcommand("verify", "Verify registered identities");
  ver->add_option("ids", vo.ids, "Identity ids");
  ver->add_flag("--all", vo.all, "Verify every registered identity");
  ver->add_option("-q", vo.qs, "Field sizes, comma separated")->delimiter(',');
  ver->add_option("-p", vo.field.p, "Characteristic");
  ver->add_option("-r", vo.field.r, "Extension degree");
  ver->add_option("--cap", vo.field.cap, "Largest field size for table construction");
  ver->add_flag("--exhaustive", vo.exhaustive, "Enumerate the full domain (default)");
  ver->add_flag("--sampled", vo.sampled, "Draw seed-deterministic random bindings");
  ver->add_option("--samples", vo.samples, "Bindings per identity in sampled mode")->capture_default_str();
  ver->add_option("--seed", vo.seed, "Sampling seed")->capture_default_str();
  ver->add_option("--jobs", vo.jobs, "Worker threads")->capture_default_str();
  ver->add_option("--max-counterexamples", vo.max_counterexamples, "Counterexamples kept per report")
      ->capture_default_str();
  ver->add_option("--out", vo.out, "Write reports to this file");
  ver->add_flag("--timing", vo.timing, "Include wall time (ms) in JSON reports");
  ver->add_flag("--mutated", vo.mutated, "Check the mutated right-hand sides instead");
  add_format(ver, vo.format);

  std::string table_kind;
  FieldOptions table_field;
  std::string table_out;
  auto* tab = app.add_subcommand("table", "Write a full value table as JSON lines");
  tab->add_option("kind", table_kind, "jacobi | binom | f21 | f1")
      ->required()
      ->check(CLI::IsMember({"jacobi", "binom", "f21", "f1"}));
  add_field_options(tab, table_field);
  tab->add_option("--out", table_out, "Output path (stdout when omitted)");

  auto* list = app.add_subcommand("list", "List registered identities");

  // CLI11 consumes arguments from the back; "-Bp" is spelled as a long option.
  std::vector<std::string> rev;
  for (auto it = args.rbegin(); it != args.rend(); ++it) rev.push_back(*it == "-Bp" ? "--Bp" : *it);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (info->parsed()) return cmd_field_info(info_field, format, out);
    if (ev->parsed()) return cmd_eval(eval, out);
    if (ver->parsed()) return cmd_verify(vo, out);
    if (tab->parsed()) return cmd_table(table_kind, table_field, table_out, out);
    if (list->parsed()) return cmd_list(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // FieldError, CharacterError, UnknownIdentityError: bad input
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace fqsum::cli
