#pragma once

// Newform files, peer files, labels and table output.
//
// A form file is a JSON object with keys
//   bound        integer, coefficients are given for every prime <= bound
//   coeffs       object: prime (decimal string) -> list of 2^k fraction strings,
//                the coordinates of a_p on b_S by mask ascending
//   eps          list of integers, the character encoding at the level
//   field_discs  list of squarefree integers d_i, E = Q(sqrt d_1, ...)
//   level, weight  integers
//   name         string (optional, display only)
//   non_cm       boolean, must be true
//   source       string naming the program that produced the coefficients
// The canonical text has sorted keys, two-space indentation, lists of
// scalars on one line and a trailing newline.
//
// A peer file lists every Galois orbit of newforms at one (level, weight, eps):
//   eps, level, weight, kind = "peers", source, and
//   orbits: list of {degree, traces}, traces[n-1] = Tr a_n for n = 1..B.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "modbrauer/brauer.hpp"
#include "modbrauer/newform.hpp"

namespace modbrauer {

/// Structural problems raise kParse; NewformData invariants raise kInvariant,
/// kInsufficientData or kScope (see make_newform). An unsupported Hecke field
/// raises kScope.
NewformData parse_form_file(std::string_view text);
std::string serialize_form(const NewformData& f);

/// Reads a file, raising kIo when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);
NewformData load_form_file(const std::filesystem::path& path);

struct PeerOrbit {
  int degree = 0;
  std::vector<Integer> traces;
};

struct PeerSet {
  std::int64_t level = 1;
  int weight = 2;
  std::vector<std::int64_t> eps;
  std::vector<PeerOrbit> orbits;
  std::string source;
};

PeerSet parse_peer_file(std::string_view text);
std::string serialize_peers(const PeerSet& s);
/// "N_k_e1-e2-...json"
std::string peer_file_name(std::int64_t level, int weight, const std::vector<std::int64_t>& eps);

/// 0 -> A, ..., 25 -> Z, 26 -> AA, 27 -> BB, ...
std::string letter_for_index(std::size_t i);

/// Letter of each orbit (in input order), by dictionary order of trace
/// sequences truncated to the shortest one. Equal truncated sequences raise
/// kInsufficientData.
std::vector<std::string> assign_letters(const PeerSet& peers);

/// N + letter + "^k" (omitted for k = 2) + "_" + encoding. Pretty output uses
/// superscript digits.
std::string format_label(std::int64_t level, const std::string& letter, int weight,
                         const std::string& encoding, bool pretty = false);

/// Label of f among its peers. Raises kInvalidArgument when the peer set is
/// for another space, kConsistency when f matches no orbit and
/// kInsufficientData on a tie at the common truncation.
std::string make_label(const NewformData& f, const PeerSet& peers, bool pretty = false);

struct SlopeEntry {
  std::int64_t prime;
  std::string text;  // integer m_v, "oo", "RPS", "St" or "a_p=0"
};

struct TableRow {
  std::int64_t level = 0;
  std::string label;         // plain form, see format_label
  std::string pretty_label;
  std::int64_t eps_order = 1;
  std::string field;         // "Q(sqrt(-1), sqrt(3))"
  std::string pretty_field;  // with radical signs
  std::vector<std::string> extra_twists;
  BrauerClass cls;
  std::vector<SlopeEntry> slopes;  // one per finite ramified prime

  bool has_qm() const { return !cls.finite_ramified.empty() || cls.infinite_ramified; }
};

/// Encodings of chi_gamma for a generating set of the twist group.
std::vector<std::string> extra_twist_encodings(const NewformData& f, const GammaGroup& g);

TableRow make_table_row(const NewformData& f, const std::string& label, const std::string& pretty_label,
                        const TwistData& td, const BrauerClass& cls);

struct TableOptions {
  bool pretty = false;
};

/// Header plus one line per QM row, sorted by (level, label). Columns are
/// separated by " | "; multi-prime cells are space separated.
std::string emit_table(std::vector<TableRow> rows, const TableOptions& opt = {});

/// One JSON object per QM row with keys label, ram_finite, ram_inf, slopes.
std::string emit_machine(std::vector<TableRow> rows, const TableOptions& opt = {});

}  // namespace modbrauer
