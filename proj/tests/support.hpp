#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "modbrauer/formdata.hpp"

namespace mbtest {

inline std::filesystem::path fixture_dir() { return MB_FIXTURE_DIR; }

inline modbrauer::NewformData fixture(const std::string& name) {
  return modbrauer::load_form_file(fixture_dir() / (name + ".json"));
}

/// Every form fixture name, sorted.
inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(fixture_dir()))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

inline modbrauer::PeerSet peers_for(const modbrauer::NewformData& f) {
  auto name = modbrauer::peer_file_name(f.level, f.weight, f.eps.encode());
  return modbrauer::parse_peer_file(modbrauer::read_text_file(fixture_dir() / "peers" / name));
}

/// Published rows: label, ramified finite primes, slope entries (same order).
struct PublishedRow {
  std::string fixture;
  std::string label;
  std::vector<std::int64_t> ramified;
  std::vector<std::string> slopes;
};

inline const std::vector<PublishedRow>& published_rows() {
  static const std::vector<PublishedRow> rows = {
      {"28A", "28A_[1,1]", {2, 3}, {"RPS", "1"}},
      {"35A", "35A_[1,3]", {2, 5}, {"1", "RPS"}},
      {"44A", "44A_[1,5]", {2, 3}, {"RPS", "1"}},
      {"56B", "56B_[1,1,3]", {2, 3}, {"RPS", "1"}},
      {"57A", "57A_[1,9]", {2, 5}, {"1", "1"}},
      {"60A", "60A_[0,1,1]", {2, 5}, {"a_p=0", "RPS"}},
      {"63A", "63A_[3,1]", {2, 3}, {"1", "a_p=0"}},
      {"77B", "77B_[3,5]", {2, 5}, {"1", "1"}},
      {"80B", "80B_[1,0,1]", {2, 3}, {"a_p=0", "1"}},
      {"92A", "92A_[1,11]", {2, 7}, {"RPS", "1"}},
      {"93D", "93D_[1,5]", {2, 3}, {"1", "RPS"}},
      {"95A", "95A_[1,3]", {2, 3}, {"1", "1"}},
      {"95B", "95B_[1,3]", {2, 3}, {"oo", "1"}},
      {"9A3", "9A^3_[1]", {3}, {"RPS"}},
      {"10A3", "10A^3_[0,1]", {2}, {"St"}},
      {"12A3", "12A^3_[1,0]", {3}, {"St"}},
      {"19B3", "19B^3_[9]", {13}, {"1"}},
      {"20A3", "20A^3_[0,1]", {2}, {"a_p=0"}},
      {"21B3", "21B^3_[1,2]", {5}, {"1"}},
      {"24C3", "24C^3_[0,1,1]", {2}, {"RPS"}},
      {"100B3", "100B^3_[0,5]", {3}, {"3"}},
      {"12A4", "12A^4_[1,1]", {3, 5}, {"RPS", "1"}},
      {"27C4", "27C^4_[0]", {2, 3}, {"1", "a_p=0"}},
      {"35A4", "35A^4_[1,3]", {2, 5}, {"3", "RPS"}},
      {"36B4", "36B^4_[1,3]", {2, 3}, {"RPS", "a_p=0"}},
      {"63B4", "63B^4_[3,3]", {2, 3}, {"3", "a_p=0"}},
      {"100D4", "100D^4_[1,5]", {2, 11}, {"RPS", "1"}},
      {"5A5", "5A^5_[1]", {2}, {"1"}},
      {"8B5", "8B^5_[1,1]", {5}, {"1"}},
      {"15C5", "15C^5_[1,2]", {2, 5, 13}, {"1", "RPS", "1"}},
      {"25C5", "25C^5_[5]", {2, 3, 7}, {"1", "1", "1"}},
      {"64B5", "64B^5_[1,8]", {3}, {"1"}},
      {"81D5", "81D^5_[9]", {2}, {"1"}},
      {"100B5", "100B^5_[0,5]", {2, 3, 23}, {"a_p=0", "1", "1"}},
  };
  return rows;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

}  // namespace mbtest
