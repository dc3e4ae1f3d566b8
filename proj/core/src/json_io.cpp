#include "fibmod/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fibmod {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  fail(Errc::Schema, path + ": " + what);
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer_text(const std::string& text, const std::string& path) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (!is_decimal(s)) schema_error(path, "expected a decimal integer, got \"" + text + "\"");
  return mpz_class(s, 10);
}

mpz_class integer_from_json(const json& j, const std::string& path) {
  if (j.is_string()) return parse_integer_text(j.get<std::string>(), path);
  if (j.is_number_integer()) return parse_integer_text(j.dump(), path);
  schema_error(path, "expected a decimal string, got " + std::string(j.type_name()));
}

mpq_class rational_from_text(const std::string& text, const std::string& path) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer_text(text, path));
  mpz_class num = parse_integer_text(text.substr(0, slash), path);
  mpz_class den = parse_integer_text(text.substr(slash + 1), path);
  if (den == 0) schema_error(path, "zero denominator in \"" + text + "\"");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string monomial_key(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

Monomial monomial_from_key(const std::string& key, std::size_t arity, const std::string& path) {
  Monomial m;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || !is_decimal(part) || part.front() == '-')
      schema_error(path, "bad exponent vector \"" + key + "\"");
    m.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  if (m.size() != arity)
    schema_error(path, "exponent vector \"" + key + "\" needs " + std::to_string(arity) + " entries");
  return m;
}

const json& require_field(const json& obj, const char* name, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) schema_error(path, std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t size_from_json(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) schema_error(path, "expected a positive integer");
  return j.get<std::size_t>();
}

}  // namespace

// ---------------------------------------------------------------------------

json ring_to_json(const Ring& ring) {
  switch (ring->kind()) {
    case RingKind::Integer: return "integer";
    case RingKind::Rational: return "rational";
    case RingKind::IntegersMod: return {{"kind", "mod"}, {"modulus", ring->modulus().get_str()}};
    case RingKind::Product:
      return {{"kind", "product"}, {"left", ring_to_json(ring->left())}, {"right", ring_to_json(ring->right())}};
    case RingKind::Polynomial:
      return {{"kind", "polynomial"}, {"base", ring_to_json(ring->base())}, {"variables", ring->variables()}};
  }
  return nullptr;
}

Ring ring_from_json(const json& j, const std::string& path) {
  std::string kind;
  if (j.is_string()) {
    kind = j.get<std::string>();
  } else if (j.is_object()) {
    const json& k = require_field(j, "kind", path);
    if (!k.is_string()) schema_error(path + ".kind", "expected a string");
    kind = k.get<std::string>();
  } else {
    schema_error(path, "expected a ring name or object");
  }
  try {
    if (kind == "integer") return RingDescriptor::integer();
    if (kind == "rational") return RingDescriptor::rational();
    if (kind == "mod") return RingDescriptor::integers_mod(integer_from_json(require_field(j, "modulus", path), path + ".modulus"));
    if (kind == "product")
      return RingDescriptor::product(ring_from_json(require_field(j, "left", path), path + ".left"),
                                     ring_from_json(require_field(j, "right", path), path + ".right"));
    if (kind == "polynomial") {
      const json& vars = require_field(j, "variables", path);
      if (!vars.is_array()) schema_error(path + ".variables", "expected an array of names");
      std::vector<std::string> names;
      for (const auto& v : vars) {
        if (!v.is_string()) schema_error(path + ".variables", "variable names must be strings");
        names.push_back(v.get<std::string>());
      }
      return RingDescriptor::polynomial(ring_from_json(require_field(j, "base", path), path + ".base"),
                                        std::move(names));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::Schema) throw;
    schema_error(path, e.what());
  }
  schema_error(path, "unknown ring kind \"" + kind + "\"");
}

json element_to_json(const Element& x) {
  switch (x.kind()) {
    case RingKind::Integer:
    case RingKind::IntegersMod: return x.integer_value().get_str();
    case RingKind::Rational: return x.rational_value().get_str();
    case RingKind::Product: return json::array({element_to_json(x.first()), element_to_json(x.second())});
    case RingKind::Polynomial: {
      json obj = json::object();
      for (const auto& t : x.terms()) obj[monomial_key(t.exponents)] = element_to_json(t.coefficient);
      return obj;
    }
  }
  return nullptr;
}

Element element_from_json(const Ring& ring, const json& j, const std::string& path) {
  switch (ring->kind()) {
    case RingKind::Integer:
    case RingKind::IntegersMod: return Element::from_integer(ring, integer_from_json(j, path));
    case RingKind::Rational: {
      if (j.is_number_integer()) return Element::from_integer(ring, integer_from_json(j, path));
      if (!j.is_string()) schema_error(path, "expected a rational string \"p/q\"");
      return Element::from_rational(ring, rational_from_text(j.get<std::string>(), path));
    }
    case RingKind::Product: {
      if (!j.is_array() || j.size() != 2) schema_error(path, "expected a 2-array for " + ring->name());
      return Element::pair(ring, element_from_json(ring->left(), j[0], path + "[0]"),
                           element_from_json(ring->right(), j[1], path + "[1]"));
    }
    case RingKind::Polynomial: {
      if (!j.is_object()) schema_error(path, "expected an {exponents: coefficient} object");
      std::vector<PolyTerm> terms;
      for (const auto& [key, value] : j.items())
        terms.push_back({monomial_from_key(key, ring->variable_count(), path),
                         element_from_json(ring->base(), value, path + "[\"" + key + "\"]")});
      return Element::polynomial(ring, std::move(terms));
    }
  }
  schema_error(path, "unsupported ring");
}

json module_element_to_json(const ModuleElement& x) {
  if (x.rank() == 1) return element_to_json(x.scalar());
  json arr = json::array();
  for (const auto& c : x.coords()) arr.push_back(element_to_json(c));
  return arr;
}

ModuleElement module_element_from_json(const Ring& ring, std::size_t rank, const json& j, const std::string& path) {
  if (rank == 1) return ModuleElement(element_from_json(ring, j, path));
  if (!j.is_array() || j.size() != rank)
    schema_error(path, "expected an array of " + std::to_string(rank) + " coordinates");
  std::vector<Element> coords;
  for (std::size_t i = 0; i < rank; ++i)
    coords.push_back(element_from_json(ring, j[i], path + "[" + std::to_string(i) + "]"));
  return ModuleElement(std::move(coords));
}

json block_to_json(const Hypercube<ModuleElement>& block) {
  json data = json::array();
  for (const auto& e : block.data()) data.push_back(module_element_to_json(e));
  return {{"shape", block.shape()}, {"data", std::move(data)}};
}

Hypercube<ModuleElement> block_from_json(const Ring& ring, std::size_t rank, const json& j, const std::string& path) {
  const json& shape_j = require_field(j, "shape", path);
  const json& data_j = require_field(j, "data", path);
  if (!shape_j.is_array() || shape_j.empty()) schema_error(path + ".shape", "expected a nonempty array");
  Shape shape;
  for (std::size_t i = 0; i < shape_j.size(); ++i)
    shape.push_back(size_from_json(shape_j[i], path + ".shape[" + std::to_string(i) + "]"));
  if (!data_j.is_array()) schema_error(path + ".data", "expected an array");
  const std::size_t volume = Hypercube<ModuleElement>::volume(shape);
  if (data_j.size() != volume)
    schema_error(path + ".data", "has " + std::to_string(data_j.size()) + " entries but shape needs " +
                                     std::to_string(volume));
  std::vector<ModuleElement> data;
  for (std::size_t i = 0; i < volume; ++i)
    data.push_back(module_element_from_json(ring, rank, data_j[i], path + ".data[" + std::to_string(i) + "]"));
  return Hypercube<ModuleElement>(std::move(shape), std::move(data));
}

SpecFile spec_from_json(const json& j) {
  if (!j.is_object()) schema_error("spec", "expected a JSON object");
  const Ring ring = ring_from_json(require_field(j, "ring", "spec"), "ring");
  std::size_t rank = 1;
  if (auto it = j.find("module_rank"); it != j.end()) rank = size_from_json(*it, "module_rank");

  const json& axes_j = require_field(j, "axes", "spec");
  if (!axes_j.is_array() || axes_j.empty()) schema_error("axes", "expected a nonempty array");
  std::vector<RecurrenceType> axes;
  for (std::size_t a = 0; a < axes_j.size(); ++a) {
    const std::string apath = "axes[" + std::to_string(a) + "]";
    const json& coeffs = require_field(axes_j[a], "coeffs", apath);
    if (!coeffs.is_array() || coeffs.empty()) schema_error(apath + ".coeffs", "expected a nonempty array");
    std::vector<Element> cs;
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      cs.push_back(element_from_json(ring, coeffs[c], apath + ".coeffs[" + std::to_string(c) + "]"));
    axes.emplace_back(std::move(cs));
  }
  FibSpec spec(std::move(axes));

  auto block = block_from_json(ring, rank, require_field(j, "initial", "spec"), "initial");
  if (block.shape() != spec.orders())
    schema_error("initial.shape", "must list the axis orders (one entry per axis)");

  std::optional<RootPair> roots;
  if (auto it = j.find("roots"); it != j.end()) {
    if (!it->is_array() || it->size() != 2) schema_error("roots", "expected [r1, r2]");
    roots.emplace(element_from_json(ring, (*it)[0], "roots[0]"), element_from_json(ring, (*it)[1], "roots[1]"));
  }
  return SpecFile{MultiSequence(std::move(spec), std::move(block)), std::move(roots)};
}

json spec_to_json(const MultiSequence& mseq, const std::optional<RootPair>& roots) {
  json axes = json::array();
  for (const auto& rec : mseq.spec().axes()) {
    json coeffs = json::array();
    for (const auto& c : rec.coefficients()) coeffs.push_back(element_to_json(c));
    axes.push_back({{"coeffs", std::move(coeffs)}});
  }
  json out = {{"ring", ring_to_json(mseq.ring())},
              {"module_rank", mseq.rank()},
              {"axes", std::move(axes)},
              {"initial", block_to_json(mseq.initial())}};
  if (roots) out["roots"] = json::array({element_to_json(roots->r1()), element_to_json(roots->r2())});
  return out;
}

SpecFile load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Schema, path.string() + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(Errc::Schema, path.string() + ": " + e.what());
  }
  try {
    return spec_from_json(j);
  } catch (const Error& e) {
    if (e.code() == Errc::Schema) fail(Errc::Schema, path.string() + ": " + e.what());
    fail(Errc::Schema, path.string() + ": " + std::string(to_string(e.code())) + ": " + e.what());
  }
}

Element parse_scalar(const Ring& ring, const std::string& text) {
  if (ring->kind() == RingKind::Rational)
    return Element::from_rational(ring, rational_from_text(text, "\"" + text + "\""));
  if (ring->kind() == RingKind::Integer || ring->kind() == RingKind::IntegersMod)
    return Element::from_integer(ring, parse_integer_text(text, "\"" + text + "\""));
  fail(Errc::Schema, "cannot parse \"" + text + "\" as an element of " + ring->name());
}

json gf_to_json(const RationalGF& gf) {
  json dens = json::array();
  for (const auto& q : gf.denominators) dens.push_back(element_to_json(q));
  return {{"variables", gf.variables}, {"numerator", element_to_json(gf.numerator)}, {"denominators", std::move(dens)},
          {"text", to_string(gf)}};
}

}  // namespace fibmod
