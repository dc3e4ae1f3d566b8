#include "fibmod_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fibmod/fibmod.hpp"

namespace fibmod::cli {

namespace {

/// Bad command-line text; maps to exit code 2 like a schema error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t parse_u64(const std::string& token, const std::string& flag) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (token.empty() || token[0] == '-') throw std::invalid_argument(token);
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) throw InputError(flag + ": invalid index token '" + token + "'");
  return v;
}

Index parse_index(const std::string& text, const std::string& flag) {
  Index idx;
  for (const auto& tok : split(text, ',')) idx.push_back(parse_u64(tok, flag));
  if (idx.empty()) throw InputError(flag + ": empty index list");
  return idx;
}

std::vector<Index> parse_positions(const std::string& text) {
  std::vector<Index> out;
  for (const auto& raw : split(text, ';')) {
    if (raw.size() < 2 || raw.front() != '(' || raw.back() != ')')
      throw InputError("--positions: expected '(n,k)', got '" + raw + "'");
    out.push_back(parse_index(raw.substr(1, raw.size() - 2), "--positions"));
  }
  return out;
}

RootPair parse_roots(const Ring& ring, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("--roots: expected 'r1,r2', got '" + text + "'");
  std::vector<Element> rs;
  for (const auto& tok : parts) {
    try {
      rs.push_back(parse_scalar(ring, tok));
    } catch (const Error&) {
      throw InputError("--roots: cannot parse token '" + tok + "' in " + ring->name());
    }
  }
  return RootPair(rs[0], rs[1]);
}

Index require_dims(Index idx, std::size_t dims, const std::string& flag) {
  if (idx.size() != dims)
    throw InputError(flag + ": expected " + std::to_string(dims) + " components, got " + std::to_string(idx.size()));
  return idx;
}

SpecFile default_binary_spec() {
  return SpecFile{MultiSequence::of(block_sequence({0, 0, 0, 0}).spec(), {0, 0, 0, 0}), std::nullopt};
}

bool is_fibonacci_axis(const RecurrenceType& rec) {
  const Ring& r = rec.ring();
  return rec.order() == 2 && rec[0] == Element::one(r) && rec[1] == Element::one(r);
}

std::string matrix_to_string(const std::vector<std::vector<mpz_class>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? " " : "") + row[c].get_str();
    out += '\n';
  }
  return out;
}

struct Options {
  std::string spec_path;
  std::string format = "grid";
  std::string index, origin, shape, roots, positions;
  std::size_t axis = 1;
  std::size_t order = 2;
  std::uint64_t n = 0;
  std::uint64_t max_index = 10;
  bool symbolic = false;
  bool fast = false;
};

SpecFile load(const Options& o) {
  if (o.spec_path.empty()) throw InputError("--spec is required for this command");
  return load_spec_file(o.spec_path);
}

int cmd_term(const Options& o, std::ostream& out) {
  const SpecFile spec = load(o);
  const Index idx = require_dims(parse_index(o.index, "--index"), spec.sequence.dims(), "--index");
  out << (o.fast ? spec.sequence.term_fast(idx) : spec.sequence.term(idx)).to_string() << '\n';
  return kOk;
}

int cmd_window(const Options& o, std::ostream& out) {
  const SpecFile spec = load(o);
  const std::size_t p = spec.sequence.dims();
  const Index origin = o.origin.empty() ? Index(p, 0) : require_dims(parse_index(o.origin, "--origin"), p, "--origin");
  const Index raw_shape = require_dims(parse_index(o.shape, "--shape"), p, "--shape");
  Shape shape(raw_shape.begin(), raw_shape.end());
  for (auto s : shape)
    if (s == 0) throw InputError("--shape: every extent must be positive");
  const auto block = spec.sequence.window(origin, shape);
  if (o.format == "csv") {
    out << format_csv(block, origin);
  } else if (o.format == "json") {
    out << block_to_json(block).dump() << '\n';
  } else {
    out << format_grid(block, origin);
  }
  return kOk;
}

int cmd_genfun(const Options& o, std::ostream& out) {
  const SpecFile spec = load(o);
  std::optional<RootPair> roots = spec.roots;
  if (!o.roots.empty()) roots = parse_roots(spec.sequence.ring(), o.roots);
  std::vector<RationalGF> gfs;
  if (roots) {
    gfs.push_back(gf_via_roots(spec.sequence, *roots));
  } else {
    gfs = gf_per_coordinate(spec.sequence);
  }
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& g : gfs) arr.push_back(gf_to_json(g));
    out << (arr.size() == 1 ? arr[0] : arr).dump() << '\n';
  } else {
    for (const auto& g : gfs) out << to_string(g) << '\n';
  }
  return kOk;
}

int cmd_basis(const Options& o, std::ostream& out) {
  std::optional<RecurrenceType> rec;
  if (o.symbolic) {
    std::size_t d = o.order;
    if (!o.spec_path.empty()) {
      const SpecFile spec = load(o);
      if (o.axis < 1 || o.axis > spec.sequence.dims()) throw InputError("--axis: out of range");
      d = spec.sequence.spec().axis(o.axis - 1).order();
    }
    if (d == 0) throw InputError("--order: must be positive");
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= d; ++j) names.push_back("a" + std::to_string(j));
    const Ring poly = RingDescriptor::polynomial(RingDescriptor::integer(), names);
    std::vector<Element> coeffs;
    for (std::size_t j = 0; j < d; ++j) coeffs.push_back(Element::variable(poly, j));
    rec.emplace(std::move(coeffs));
  } else {
    const SpecFile spec = load(o);
    if (o.axis < 1 || o.axis > spec.sequence.dims()) throw InputError("--axis: out of range");
    rec.emplace(spec.sequence.spec().axis(o.axis - 1));
  }
  const auto values = basis_values(*rec, o.n);
  for (std::size_t i = 0; i < values.size(); ++i)
    out << "P_" << i << "^[" << o.n << "] = " << values[i].to_string() << '\n';
  return kOk;
}

int cmd_diag(const Options& o, std::ostream& out) {
  const SpecFile spec = load(o);
  const MultiSequence& seq = spec.sequence;
  if (seq.dims() != 2) throw InputError("diag-check needs a two-axis spec");
  const bool fib = is_fibonacci_axis(seq.spec().axis(0)) && is_fibonacci_axis(seq.spec().axis(1));
  std::size_t checks = 0;
  for (std::uint64_t n = 0; n <= o.max_index; ++n) {
    for (std::uint64_t k = 0; k <= o.max_index; ++k) {
      const bool ok = fib ? diagonal_identity_fib(seq, n, k) : diagonal_check(seq, n, k);
      if (!ok) {
        out << "FAILED at (" << n << "," << k << ")\n";
        return kIdentityFailed;
      }
      ++checks;
    }
  }
  out << "OK (" << checks << " checks)\n";
  return kOk;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  auto orbits = classify_orbits();
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& x, const Orbit& y) {
    return primitive_label(x.primitive).value_or("?") < primitive_label(y.primitive).value_or("?");
  });
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& orb : orbits) {
      json members = json::array();
      for (const auto& m : orb.members)
        members.push_back({{"block", m.block}, {"shift", {m.shift.horizontal, m.shift.vertical}}});
      arr.push_back({{"label", primitive_label(orb.primitive).value_or("?")},
                     {"primitive", orb.primitive},
                     {"primitive_index", orb.primitive_index},
                     {"members", std::move(members)}});
    }
    out << arr.dump() << '\n';
    return kOk;
  }
  out << orbits.size() << " primitive orbits\n";
  for (const auto& orb : orbits) {
    const std::string label = primitive_label(orb.primitive).value_or("?");
    out << label << " (size " << orb.members.size() << ")\n";
    for (const auto& m : orb.members) {
      const auto text = block_to_string(m.block);
      const auto nl = text.find('\n');
      out << "  " << shift_name(m.shift, label) << ": " << text.substr(0, nl) << " / " << text.substr(nl + 1) << '\n';
    }
  }
  const auto cert = generation_certificate();
  out << "generation certificate (B_1 windows at (0,0),(1,0),(0,1),(1,1)), det = " << cert.determinant.get_str()
      << '\n'
      << matrix_to_string(cert.rows);
  return kOk;
}

int cmd_determine(const Options& o, std::ostream& out) {
  const SpecFile spec = o.spec_path.empty() ? default_binary_spec() : load(o);
  if (o.positions.empty()) throw InputError("--positions is required");
  auto positions = parse_positions(o.positions);
  for (const auto& pos : positions) require_dims(pos, spec.sequence.dims(), "--positions");
  out << (positions_determine(spec.sequence.spec(), positions) ? "DETERMINING" : "NOT DETERMINING") << '\n';
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const SpecFile spec = load(o);
  const Index idx(spec.sequence.dims(), o.n);
  const auto start = std::chrono::steady_clock::now();
  const ModuleElement value = spec.sequence.term_fast(idx);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  out << "value = " << value.to_string() << '\n';
  out << "elapsed_ms = " << elapsed.count() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multi-dimensional linear recurrence sequences", "fibmod"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--spec", o.spec_path, "JSON spec file");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"grid", "csv", "json", "text"}));

  auto* term = app.add_subcommand("term", "Print one term");
  term->add_option("--index", o.index, "Comma-separated index")->required();
  term->add_flag("--fast", o.fast, "Use companion-matrix powering");

  auto* window = app.add_subcommand("window", "Print a block of terms");
  window->add_option("--origin", o.origin, "Comma-separated origin (default 0,...)");
  window->add_option("--shape", o.shape, "Comma-separated extents")->required();

  auto* genfun = app.add_subcommand("genfun", "Print the rational generating function");
  genfun->add_option("--roots", o.roots, "Root pair r1,r2");

  auto* basis = app.add_subcommand("basis", "Print basis polynomial values P_i^[n]");
  basis->add_option("--axis", o.axis, "1-based axis of the spec");
  basis->add_option("--n", o.n, "Term index")->required();
  basis->add_option("--order", o.order, "Recurrence order for --symbolic without a spec");
  basis->add_flag("--symbolic", o.symbolic, "Use indeterminate coefficients a1..ad");

  auto* diag = app.add_subcommand("diag-check", "Check the anti-diagonal identity");
  diag->add_option("--max", o.max_index, "Largest n and k checked");

  auto* orbits = app.add_subcommand("orbits", "Classify binary 2x2 blocks into shift orbits");

  auto* determine = app.add_subcommand("determine", "Do the given positions determine the sequence?");
  determine->add_option("--positions", o.positions, "Positions \"(n,k);(n,k);...\"")->required();

  auto* bench = app.add_subcommand("bench", "Time term_fast at index (n,...,n)");
  bench->add_option("--n", o.n, "Index on every axis")->required();

  for (auto* sub : {term, window, genfun, basis, diag, orbits, determine, bench}) sub->fallthrough();

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (term->parsed()) return cmd_term(o, out);
    if (window->parsed()) return cmd_window(o, out);
    if (genfun->parsed()) return cmd_genfun(o, out);
    if (basis->parsed()) return cmd_basis(o, out);
    if (diag->parsed()) return cmd_diag(o, out);
    if (orbits->parsed()) return cmd_orbits(o, out);
    if (determine->parsed()) return cmd_determine(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::HypothesisViolated:
        out << "HYPOTHESIS VIOLATED\n";
        err << e.what() << '\n';
        return kPreconditionFailed;
      case Errc::NotInvertible:
      case Errc::NotInvertibleCoefficient:
      case Errc::TwoNotInvertible:
      case Errc::SpecMismatch:
      case Errc::AmbiguousAtBound:
        err << "precondition failed (" << to_string(e.code()) << "): " << e.what() << '\n';
        return kPreconditionFailed;
      default:
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return kInputError;
    }
  }
  return kInputError;
}

}  // namespace fibmod::cli
