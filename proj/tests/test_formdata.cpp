#include "doctest.h"

#include <fstream>
#include <functional>
#include <sstream>

#include "modbrauer/error.hpp"
#include "modbrauer/formdata.hpp"
#include "support.hpp"

using namespace modbrauer;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

std::string fixture_text(const std::string& name) {
  return read_text_file(mbtest::fixture_dir() / (name + ".json"));
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

TableRow row_for(const std::string& name) {
  auto f = mbtest::fixture(name);
  auto peers = mbtest::peers_for(f);
  auto td = analyze_twists(f);
  return make_table_row(f, make_label(f, peers), make_label(f, peers, true), td, global_class(f, td));
}

const char* kMinimal = R"({
  "bound": 100,
  "coeffs": {},
  "eps": [],
  "field_discs": [],
  "level": 1,
  "non_cm": true,
  "source": "hand written",
  "weight": 2
})";

}  // namespace

TEST_CASE("canonical round trip of every fixture") {
  for (const auto& name : mbtest::fixture_names()) {
    CAPTURE(name);
    auto text = fixture_text(name);
    auto f = parse_form_file(text);
    CHECK(serialize_form(f) == text);
    CHECK(serialize_form(parse_form_file(serialize_form(f))) == text);
  }
  for (const auto& e : std::filesystem::directory_iterator(mbtest::fixture_dir() / "peers")) {
    auto text = read_text_file(e.path());
    CHECK(serialize_peers(parse_peer_file(text)) == text);
  }
}

TEST_CASE("parsing examples") {
  // A placeholder at level 1 over Q with every a_p up to the bound.
  std::string coeffs;
  for (std::int64_t p = 2; p <= 100; ++p)
    if (is_prime(p)) coeffs += (coeffs.empty() ? "" : ", ") + ("\"" + std::to_string(p) + "\": [\"0\"]");
  std::string minimal = replace_once(kMinimal, "\"coeffs\": {}", "\"coeffs\": {" + coeffs + "}");
  auto m = parse_form_file(minimal);
  CHECK(m.level == 1);
  CHECK(m.field.degree() == 1);
  CHECK(m.eps.is_trivial());
  CHECK(code_of([] { parse_form_file(kMinimal); }) == ErrorCode::kInsufficientData);

  auto f = parse_form_file(fixture_text("19B3"));
  CHECK(f.field.gens() == std::vector<std::int64_t>{-13});
  CHECK(f.name == "19B3");
}

TEST_CASE("structural errors") {
  auto text = fixture_text("19B3");
  CHECK(code_of([] { parse_form_file("{"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_form_file("[]"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"weight\": 3", "\"weight\": \"3\"")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"weight\": 3", "\"weight\": 3, \"extra\": 1")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"level\": 19,\n", "")); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"2\": [", "\"02\": [")); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"eps\": [9]", "\"eps\": [9, 1]")); }) ==
        ErrorCode::kParse);
}

TEST_CASE("invariant and scope errors are distinct") {
  auto text = fixture_text("19B3");
  // eps(-1) = -1 but k = 4 is even.
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"weight\": 3", "\"weight\": 4")); }) ==
        ErrorCode::kInvariant);
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"non_cm\": true", "\"non_cm\": false")); }) ==
        ErrorCode::kScope);
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"field_discs\": [-13]", "\"field_discs\": [-52]")); }) ==
        ErrorCode::kScope);
  CHECK(code_of([&] { parse_form_file(replace_once(text, "\"bound\": 100", "\"bound\": 40")); }) ==
        ErrorCode::kInsufficientData);
  CHECK(code_of([] { load_form_file("/nonexistent/form.json"); }) == ErrorCode::kIo);
}

TEST_CASE("letters") {
  CHECK(letter_for_index(0) == "A");
  CHECK(letter_for_index(25) == "Z");
  CHECK(letter_for_index(26) == "AA");
  CHECK(letter_for_index(27) == "BB");
  CHECK(letter_for_index(52) == "AAA");
}

TEST_CASE("labels") {
  auto f = mbtest::fixture("19B3");
  auto peers = mbtest::peers_for(f);
  CHECK(make_label(f, peers) == "19B^3_[9]");
  CHECK(make_label(f, peers, true) == "19B³_[9]");
  CHECK(format_label(28, "A", 2, "[1,1]") == "28A_[1,1]");
  CHECK(format_label(100, "D", 14, "[1,5]", true) == "100D¹⁴_[1,5]");

  auto e = mbtest::fixture("11A");
  CHECK(make_label(e, mbtest::peers_for(e)) == "11A_[0]");

  // Order of the orbits in the file does not matter.
  auto rev = peers;
  std::reverse(rev.orbits.begin(), rev.orbits.end());
  CHECK(make_label(f, rev) == "19B^3_[9]");
  auto letters = assign_letters(peers), rletters = assign_letters(rev);
  std::reverse(rletters.begin(), rletters.end());
  CHECK(letters == rletters);

  auto tie = peers;
  tie.orbits.push_back(tie.orbits.front());
  CHECK(code_of([&] { assign_letters(tie); }) == ErrorCode::kInsufficientData);
  auto other = peers;
  other.weight = 5;
  CHECK(code_of([&] { make_label(f, other); }) == ErrorCode::kInvalidArgument);
  auto missing = peers;
  missing.orbits.erase(missing.orbits.begin() + 1);
  CHECK(code_of([&] { make_label(f, missing); }) == ErrorCode::kConsistency);
}

TEST_CASE("letters form a bijection for every peer file") {
  for (const auto& e : std::filesystem::directory_iterator(mbtest::fixture_dir() / "peers")) {
    auto peers = parse_peer_file(read_text_file(e.path()));
    auto letters = assign_letters(peers);
    std::sort(letters.begin(), letters.end());
    for (std::size_t i = 0; i < letters.size(); ++i) CHECK(letters[i] == letter_for_index(i));
  }
}

TEST_CASE("table emission") {
  const std::string header = "Label | ord(eps) | E | Extra twists | Ramification | Slope\n";
  CHECK(emit_table({}) == header);
  CHECK(emit_machine({}).empty());
  // 11A has a split class and is filtered out.
  CHECK(emit_table({row_for("11A")}) == header);

  std::vector<TableRow> rows;
  for (const auto& name : {"95B", "28A", "19B3"}) rows.push_back(row_for(name));
  auto text = emit_table(rows);
  CHECK(text == emit_table({rows[2], rows[0], rows[1]}));
  CHECK(text.find("19B^3_[9] | 2 | Q(sqrt(-13)) | [9] | 13 | 1\n") != std::string::npos);
  CHECK(text.find("28A") < text.find("95B"));
  auto pretty = emit_table(rows, {true});
  CHECK(pretty.find("19B³_[9] | 2 | Q(√−13) | [9] | 13 | 1\n") != std::string::npos);
  CHECK(pretty.find("| 2 3 | ∞ 1\n") != std::string::npos);
  auto machine = emit_machine(rows);
  CHECK(machine.find(R"({"label":"95B_[1,3]","ram_finite":[2,3],"ram_inf":false,"slopes":["oo","1"]})") !=
        std::string::npos);
}

TEST_CASE("weight two rows match the golden file") {
  std::vector<TableRow> rows;
  for (const auto& r : mbtest::published_rows())
    if (mbtest::fixture(r.fixture).weight == 2) rows.push_back(row_for(r.fixture));
  // Keep the label, ramification and slope columns.
  std::istringstream table(emit_table(rows));
  std::string line, projected;
  std::getline(table, line);
  while (std::getline(table, line)) {
    std::vector<std::string> cells;
    std::size_t pos = 0, next;
    while ((next = line.find(" | ", pos)) != std::string::npos) {
      cells.push_back(line.substr(pos, next - pos));
      pos = next + 3;
    }
    cells.push_back(line.substr(pos));
    REQUIRE(cells.size() == 6);
    projected += cells[0] + " | " + cells[4] + " | " + cells[5] + "\n";
  }
  auto golden = read_text_file(std::filesystem::path(MB_GOLDEN_DIR) / "weight2_table.txt");
  CHECK(projected == golden);
}
