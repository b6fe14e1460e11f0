#include "lensalex/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"
#include "lensalex/alexander.hpp"
#include "lensalex/errors.hpp"
#include "lensalex/format.hpp"
#include "lensalex/oracle.hpp"

namespace lensalex::cli {

using nlohmann::json;

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "lens") return Mode::Lens;
  if (s == "solid-torus") return Mode::SolidTorus;
  if (s == "classical") return Mode::Classical;
  if (s == "multivariable") return Mode::Multivariable;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& s) {
  if (s == "plain") return Format::Plain;
  if (s == "latex") return Format::Latex;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

namespace {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Lens: return "lens";
    case Mode::SolidTorus: return "solid-torus";
    case Mode::Classical: return "classical";
    case Mode::Multivariable: return "multivariable";
  }
  return "?";
}

struct Evaluation {
  LaurentPoly polynomial;
  VariableContext context;
  json diagnostics = json::object();
  std::optional<bool> agree;
  std::string oracle_note;
};

void validate(const JobSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be positive");
  const bool has_surgery = spec.p.has_value() || spec.q.has_value();
  if (spec.mode == Mode::Lens) {
    if (!spec.p || !spec.q) throw std::invalid_argument("lens mode requires --p and --q");
  } else if (has_surgery) {
    throw std::invalid_argument(std::string("--p/--q are only valid in lens mode, not ") +
                                mode_name(spec.mode));
  }
}

Evaluation evaluate(const JobSpec& spec) {
  validate(spec);
  Evaluation ev;
  switch (spec.mode) {
    case Mode::Lens: {
      const MixedBraidWord w = parse_braid(spec.word, spec.n);
      ev.context = lens_context();
      LensCrossCheck check;
      if (spec.oracle) check = alex_lens_checked(w, *spec.p, *spec.q);
      else check.direct = alex_lens(w, *spec.p, *spec.q);
      const AlexResult& r = check.direct;
      ev.polynomial = r.polynomial;
      ev.diagnostics = {{"beta_class", r.params.beta_class},
                        {"p_prime", r.params.p_prime},
                        {"beta_prime", r.params.beta_prime},
                        {"nu", r.nu},
                        {"determinant", to_string(r.determinant, ev.context)},
                        {"factored_route", r.factored_route}};
      if (spec.oracle) {
        const LaurentPoly burau = alex_solid_torus(w);
        const LaurentPoly fox = oracle_two_variable(w, kDefaultMixedColors);
        const bool two_var = equal_up_to_units(burau, fox);
        ev.agree = two_var && check.agree;
        if (!two_var)
          ev.oracle_note = "Fox oracle gives " + to_string(fox, ev.context) +
                           ", Burau gives " + to_string(burau, ev.context);
        else if (!check.agree)
          ev.oracle_note = "factored route gives " + to_string(check.factored, ev.context);
      }
      break;
    }
    case Mode::SolidTorus: {
      const MixedBraidWord w = parse_braid(spec.word, spec.n);
      ev.context = mixed_context();
      ev.polynomial = alex_solid_torus(w);
      ev.diagnostics = {{"beta_class", t_exponent_sum(w)},
                        {"nu", component_partition(w).count()},
                        {"determinant", to_string(rho_determinant(w), ev.context)}};
      if (spec.oracle) {
        const LaurentPoly fox = oracle_two_variable(w, kDefaultMixedColors);
        ev.agree = equal_up_to_units(ev.polynomial, fox);
        if (!*ev.agree) ev.oracle_note = "Fox oracle gives " + to_string(fox, ev.context);
      }
      break;
    }
    case Mode::Classical: {
      const PlainBraidWord w = parse_plain_braid(spec.word, spec.n);
      ev.context = VariableContext{"t"};
      ev.polynomial = alex_classical_knot(w, 0);
      ev.diagnostics = {{"nu", 1}};
      if (spec.oracle) {
        const LaurentPoly fox = fox_alexander(w, {0});
        ev.agree = equal_up_to_units(ev.polynomial, fox);
        if (!*ev.agree) ev.oracle_note = "Fox oracle gives " + to_string(fox, ev.context);
      }
      break;
    }
    case Mode::Multivariable: {
      const PlainBraidWord w = parse_plain_braid(spec.word, spec.n);
      MultivariableResult r = alex_classical_multivariable(w);
      ev.context = r.context;
      ev.polynomial = r.polynomial;
      ev.diagnostics = {{"nu", r.components.count()}};
      if (spec.oracle) {
        std::vector<VarId> vars;
        for (int k = 0; k < r.components.count(); ++k) vars.push_back(static_cast<VarId>(k));
        const LaurentPoly fox = fox_alexander(w, vars);
        ev.agree = equal_up_to_units(ev.polynomial, fox);
        if (!*ev.agree) ev.oracle_note = "Fox oracle gives " + to_string(fox, ev.context);
      }
      break;
    }
  }
  return ev;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NotDivisible*>(&e)) return kNotDivisible;
  return kInvalidInput;
}

json base_record(const JobSpec& spec) {
  json rec = {{"word", spec.word}, {"n", spec.n}, {"mode", mode_name(spec.mode)}};
  rec["p"] = spec.p ? json(*spec.p) : json(nullptr);
  rec["q"] = spec.q ? json(*spec.q) : json(nullptr);
  return rec;
}

json to_record(const JobSpec& spec, const Evaluation& ev) {
  json rec = base_record(spec);
  for (const auto& [k, v] : ev.diagnostics.items()) rec[k] = v;
  rec["polynomial"] = to_json(ev.polynomial, ev.context);
  rec["text"] = to_string(ev.polynomial, ev.context);
  if (ev.agree) rec["agree_oracle"] = *ev.agree;
  return rec;
}

}  // namespace

Outcome run_single(const JobSpec& spec) {
  Outcome o;
  Evaluation ev;
  try {
    ev = evaluate(spec);
  } catch (const std::exception& e) {
    o.exit_code = exit_code_for(e);
    o.err = std::string("error: ") + e.what() + "\n";
    return o;
  }

  switch (spec.format) {
    case Format::Plain:
      o.out = to_string(ev.polynomial, ev.context) + "\n";
      break;
    case Format::Latex:
      o.out = to_latex(ev.polynomial, ev.context) + "\n";
      break;
    case Format::Json:
      o.out = to_record(spec, ev).dump() + "\n";
      break;
  }
  for (const auto& [k, v] : ev.diagnostics.items())
    o.err += k + " = " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  if (ev.agree) {
    o.err += std::string("oracle: ") + (*ev.agree ? "agree" : "DISAGREE") + "\n";
    if (!ev.oracle_note.empty()) o.err += ev.oracle_note + "\n";
    if (!*ev.agree) o.exit_code = kOracleDisagreement;
  }
  return o;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Fills `spec` from one batch line; throws std::invalid_argument.
void apply_line(const std::string& line, JobSpec& spec) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, ';');) fields.push_back(trim(f));
  if (!line.empty() && line.back() == ';') fields.emplace_back();
  if (fields.size() > 4) throw std::invalid_argument("too many fields");
  spec.word = fields.empty() ? std::string() : fields[0];
  auto number = [](const std::string& f) {
    std::size_t used = 0;
    const long v = std::stol(f, &used);
    if (used != f.size()) throw std::invalid_argument("bad number '" + f + "'");
    return v;
  };
  if (fields.size() > 1 && !fields[1].empty()) spec.n = static_cast<int>(number(fields[1]));
  if (fields.size() > 2 && !fields[2].empty()) spec.p = number(fields[2]);
  if (fields.size() > 3 && !fields[3].empty()) spec.q = number(fields[3]);
}

std::string batch_record(const std::string& line, const JobSpec& shared) {
  JobSpec spec = shared;
  spec.word = line;
  try {
    apply_line(line, spec);
  } catch (const std::exception& e) {
    json rec = base_record(spec);
    rec["error"] = std::string("bad line: ") + e.what();
    return rec.dump();
  }
  try {
    return to_record(spec, evaluate(spec)).dump();
  } catch (const std::exception& e) {
    json rec = base_record(spec);
    rec["error"] = e.what();
    if (dynamic_cast<const NotDivisible*>(&e)) rec["error_kind"] = "NotDivisible";
    return rec.dump();
  }
}

}  // namespace

Outcome run_batch(std::istream& input, const JobSpec& shared, unsigned threads) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(input, line);) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }

  std::vector<std::string> records(lines.size());
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, lines.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < lines.size(); k = next++)
      records[k] = batch_record(lines[k], shared);
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  pool.clear();

  Outcome o;
  for (const auto& r : records) o.out += r + "\n";
  return o;
}

unsigned thread_cap_from_env() {
  const char* v = std::getenv("LENS_ALEX_THREADS");
  if (!v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1) return 0;
  return static_cast<unsigned>(n);
}

}  // namespace lensalex::cli
