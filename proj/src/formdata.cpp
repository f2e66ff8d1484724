#include "modbrauer/formdata.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "modbrauer/error.hpp"

namespace modbrauer {

using nlohmann::json;

namespace {

// Mirrors the generator's layout: sorted keys, two-space indent, scalar
// lists inline.
void dump_canonical(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  " + json(it.key()).dump(-1, ' ', true) + ": ";
      dump_canonical(it.value(), indent + 1, out);
    }
    out += "\n" + pad + "}";
    return;
  }
  if (j.is_array()) {
    bool scalars = std::none_of(j.begin(), j.end(),
                                [](const json& v) { return v.is_array() || v.is_object(); });
    if (scalars) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += j[i].dump(-1, ' ', true);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad + "  ";
      dump_canonical(j[i], indent + 1, out);
    }
    out += "\n" + pad + "]";
    return;
  }
  out += j.dump(-1, ' ', false);
}

std::string canonical(const json& j) {
  std::string out;
  dump_canonical(j, 0, out);
  return out + "\n";
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::kParse, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t get_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorCode::kParse, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(ErrorCode::kParse, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::int64_t> get_int_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(ErrorCode::kParse, std::string("field '") + key + "' must be a list");
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer())
      fail(ErrorCode::kParse, std::string("field '") + key + "' must hold integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(ErrorCode::kParse, "top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; });
    if (!known) fail(ErrorCode::kParse, "unknown field '" + it.key() + "'");
  }
}

std::int64_t parse_prime_key(const std::string& s) {
  if (s.empty() || s.size() > 12 || s[0] == '0' ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(ErrorCode::kParse, "coefficient index '" + s + "' is not a decimal integer");
  return std::stoll(s);
}

std::string join_ints(const std::vector<std::int64_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string pretty_field(const MQField& f) {
  if (f.gens().empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < f.gens().size(); ++i) {
    if (i) s += ", ";
    std::int64_t d = f.gens()[i];
    s += "√";
    s += d < 0 ? "−" + std::to_string(-d) : std::to_string(d);
  }
  return s + ")";
}

}  // namespace

NewformData parse_form_file(std::string_view text) {
  json j = parse_json(text, "form file");
  reject_unknown(j, {"bound", "coeffs", "eps", "field_discs", "level", "name", "non_cm", "source",
                     "weight"});
  NewformData f;
  f.level = get_int(j, "level");
  if (f.level < 1) fail(ErrorCode::kInvariant, "level must be positive");
  f.weight = static_cast<int>(get_int(j, "weight"));
  f.bound = get_int(j, "bound");
  f.source = get_string(j, "source");
  if (j.contains("name")) f.name = get_string(j, "name");
  const json& cm = field(j, "non_cm");
  if (!cm.is_boolean()) fail(ErrorCode::kParse, "field 'non_cm' must be a boolean");
  f.non_cm = cm.get<bool>();
  f.eps = DirichletCharacter::from_encoding(f.level, get_int_list(j, "eps"));
  auto gens = get_int_list(j, "field_discs");
  try {
    f.field = MQField(gens);
  } catch (const Error& e) {
    fail(ErrorCode::kScope, std::string("unsupported Hecke field: ") + e.what());
  }
  const json& cs = field(j, "coeffs");
  if (!cs.is_object()) fail(ErrorCode::kParse, "field 'coeffs' must be an object");
  for (auto it = cs.begin(); it != cs.end(); ++it) {
    std::int64_t p = parse_prime_key(it.key());
    if (!it.value().is_array()) fail(ErrorCode::kParse, "a_" + it.key() + " must be a list");
    std::vector<Rational> coords;
    for (const auto& c : it.value()) {
      if (!c.is_string()) fail(ErrorCode::kParse, "a_" + it.key() + " coordinates must be strings");
      coords.push_back(parse_rational(c.get<std::string>()));
    }
    if (coords.size() != f.field.degree())
      fail(ErrorCode::kParse, "a_" + it.key() + " has " + std::to_string(coords.size()) +
                                  " coordinates, expected " + std::to_string(f.field.degree()));
    f.coeffs.emplace(p, MQElement::from_coords(f.field, std::move(coords)));
  }
  return make_newform(std::move(f));
}

std::string serialize_form(const NewformData& f) {
  json j = json::object();
  j["bound"] = f.bound;
  json cs = json::object();
  for (const auto& [p, a] : f.coeffs) cs[std::to_string(p)] = a.to_strings();
  j["coeffs"] = cs;
  j["eps"] = f.eps.encode();
  j["field_discs"] = f.field.gens();
  j["level"] = f.level;
  if (!f.name.empty()) j["name"] = f.name;
  j["non_cm"] = f.non_cm;
  j["source"] = f.source;
  j["weight"] = f.weight;
  return canonical(j);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorCode::kIo, "error reading " + path.string());
  return ss.str();
}

NewformData load_form_file(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  try {
    return parse_form_file(text);
  } catch (const Error& e) {
    fail(e.code(), path.filename().string() + ": " + e.what());
  }
}

PeerSet parse_peer_file(std::string_view text) {
  json j = parse_json(text, "peer file");
  reject_unknown(j, {"eps", "kind", "level", "orbits", "source", "weight"});
  if (get_string(j, "kind") != "peers") fail(ErrorCode::kParse, "peer file kind must be 'peers'");
  PeerSet s;
  s.level = get_int(j, "level");
  s.weight = static_cast<int>(get_int(j, "weight"));
  s.eps = get_int_list(j, "eps");
  s.source = get_string(j, "source");
  const json& orbs = field(j, "orbits");
  if (!orbs.is_array()) fail(ErrorCode::kParse, "field 'orbits' must be a list");
  for (const auto& o : orbs) {
    reject_unknown(o, {"degree", "traces"});
    PeerOrbit po;
    po.degree = static_cast<int>(get_int(o, "degree"));
    for (auto t : get_int_list(o, "traces")) po.traces.push_back(Integer(static_cast<long>(t)));
    if (po.traces.empty()) fail(ErrorCode::kParse, "orbit without traces");
    s.orbits.push_back(std::move(po));
  }
  return s;
}

std::string serialize_peers(const PeerSet& s) {
  json j = json::object();
  j["eps"] = s.eps;
  j["kind"] = "peers";
  j["level"] = s.level;
  json orbs = json::array();
  for (const auto& o : s.orbits) {
    json t = json::array();
    for (const auto& x : o.traces) t.push_back(x.get_si());
    orbs.push_back(json{{"degree", o.degree}, {"traces", t}});
  }
  j["orbits"] = orbs;
  j["source"] = s.source;
  j["weight"] = s.weight;
  return canonical(j);
}

std::string peer_file_name(std::int64_t level, int weight, const std::vector<std::int64_t>& eps) {
  return std::to_string(level) + "_" + std::to_string(weight) + "_" + join_ints(eps, "-") + ".json";
}

std::string letter_for_index(std::size_t i) {
  return std::string(i / 26 + 1, static_cast<char>('A' + i % 26));
}

namespace {

std::size_t common_length(const PeerSet& peers) {
  std::size_t len = SIZE_MAX;
  for (const auto& o : peers.orbits) len = std::min(len, o.traces.size());
  return len;
}

/// Position of each orbit in dictionary order of truncated trace sequences.
std::vector<std::size_t> orbit_ranks(const PeerSet& peers, std::size_t len) {
  std::vector<std::size_t> order(peers.orbits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto prefix_less = [&](std::size_t a, std::size_t b) {
    const auto& x = peers.orbits[a].traces;
    const auto& y = peers.orbits[b].traces;
    return std::lexicographical_compare(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(len),
                                        y.begin(), y.begin() + static_cast<std::ptrdiff_t>(len));
  };
  std::sort(order.begin(), order.end(), prefix_less);
  for (std::size_t i = 1; i < order.size(); ++i)
    if (!prefix_less(order[i - 1], order[i]))
      fail(ErrorCode::kInsufficientData,
           "insufficient precision to label: two orbits agree on the first " +
               std::to_string(len) + " traces");
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

}  // namespace

std::vector<std::string> assign_letters(const PeerSet& peers) {
  auto rank = orbit_ranks(peers, common_length(peers));
  std::vector<std::string> out;
  for (auto r : rank) out.push_back(letter_for_index(r));
  return out;
}

std::string format_label(std::int64_t level, const std::string& letter, int weight,
                         const std::string& encoding, bool pretty) {
  static const char* const kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(level) + letter;
  if (weight != 2) {
    if (pretty) {
      for (char c : std::to_string(weight)) s += kSup[c - '0'];
    } else {
      s += "^" + std::to_string(weight);
    }
  }
  return s + "_" + encoding;
}

std::string make_label(const NewformData& f, const PeerSet& peers, bool pretty) {
  if (peers.level != f.level || peers.weight != f.weight || peers.eps != f.eps.encode())
    fail(ErrorCode::kInvalidArgument, "peer set is for a different space");
  if (peers.orbits.empty()) fail(ErrorCode::kInvalidArgument, "empty peer set");
  std::size_t len = std::min<std::size_t>(common_length(peers), static_cast<std::size_t>(f.bound));
  auto rank = orbit_ranks(peers, len);
  auto own = f.trace_sequence(static_cast<std::int64_t>(len));
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < peers.orbits.size(); ++i) {
    const auto& t = peers.orbits[i].traces;
    if (std::equal(own.begin(), own.end(), t.begin())) hit = i;
  }
  if (!hit) fail(ErrorCode::kConsistency, "form does not match any orbit in its peer set");
  return format_label(f.level, letter_for_index(rank[*hit]), f.weight, f.eps.to_string(), pretty);
}

std::vector<std::string> extra_twist_encodings(const NewformData& f, const GammaGroup& g) {
  std::set<Mask> span{0};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    Mask m = g.elements[i];
    if (span.count(m)) continue;
    std::set<Mask> next = span;
    for (Mask s : span) next.insert(s ^ m);
    span = std::move(next);
    const auto& chi = g.chis[i];
    std::string enc = chi.to_string();
    if (chi.modulus() != f.level) enc += " mod " + std::to_string(chi.modulus());
    out.push_back(enc);
  }
  return out;
}

TableRow make_table_row(const NewformData& f, const std::string& label, const std::string& pretty_label,
                        const TwistData& td, const BrauerClass& cls) {
  TableRow r;
  r.level = f.level;
  r.label = label;
  r.pretty_label = pretty_label;
  r.eps_order = f.eps.order();
  r.field = f.field.to_string();
  r.pretty_field = pretty_field(f.field);
  r.extra_twists = extra_twist_encodings(f, td.group);
  r.cls = cls;
  for (auto p : cls.finite_ramified) {
    SlopeEntry e{p, ""};
    if (!f.is_good(p)) {
      e.text = bad_prime_label(classify_bad_prime(f, p).kind);
    } else if (p > f.bound) {
      e.text = "?";
    } else {
      auto m = slope_m(f, p);
      e.text = m ? std::to_string(*m) : "oo";
    }
    r.slopes.push_back(e);
  }
  return r;
}

namespace {

std::vector<TableRow> qm_sorted(std::vector<TableRow> rows) {
  std::erase_if(rows, [](const TableRow& r) { return !r.has_qm(); });
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return a.level != b.level ? a.level < b.level : a.label < b.label;
  });
  return rows;
}

std::string slope_text(const SlopeEntry& e, bool pretty) {
  if (e.text == "oo") return pretty ? "∞" : "oo";
  return e.text;
}

}  // namespace

std::string emit_table(std::vector<TableRow> rows, const TableOptions& opt) {
  std::string out = "Label | ord(eps) | E | Extra twists | Ramification | Slope\n";
  for (const auto& r : qm_sorted(std::move(rows))) {
    std::string twists;
    for (std::size_t i = 0; i < r.extra_twists.size(); ++i)
      twists += (i ? "," : "") + r.extra_twists[i];
    std::string ram, slopes;
    for (std::size_t i = 0; i < r.slopes.size(); ++i) {
      ram += (i ? " " : "") + std::to_string(r.slopes[i].prime);
      slopes += (i ? " " : "") + slope_text(r.slopes[i], opt.pretty);
    }
    out += (opt.pretty ? r.pretty_label : r.label) + " | " + std::to_string(r.eps_order) + " | " +
           (opt.pretty ? r.pretty_field : r.field) + " | " + twists + " | " + ram + " | " +
           slopes + "\n";
  }
  return out;
}

std::string emit_machine(std::vector<TableRow> rows, const TableOptions& opt) {
  std::string out;
  for (const auto& r : qm_sorted(std::move(rows))) {
    json j = json::object();
    j["label"] = opt.pretty ? r.pretty_label : r.label;
    j["ram_finite"] = r.cls.finite_ramified;
    j["ram_inf"] = r.cls.infinite_ramified;
    json s = json::array();
    for (const auto& e : r.slopes) s.push_back(slope_text(e, opt.pretty));
    j["slopes"] = s;
    out += j.dump(-1, ' ', false) + "\n";
  }
  return out;
}

}  // namespace modbrauer
