#include "bridge/plat.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "bridge/error.hpp"

namespace bridge {

using nlohmann::json;

void validate(const PlatWord& plat) {
  if (plat.n < 1)
    throw bridge_error(errc::invalid_bridge_count, "n must be positive, got " + std::to_string(plat.n));
  for (std::size_t k = 0; k < plat.letters.size(); ++k) {
    const Letter& l = plat.letters[k];
    if (l.index < 1 || l.index > 2 * plat.n - 1)
      throw bridge_error(errc::index_out_of_range,
                         "letter " + std::to_string(k + 1) + " has index " + std::to_string(l.index) +
                             ", allowed 1.." + std::to_string(2 * plat.n - 1));
    if (l.sign != 1 && l.sign != -1)
      throw bridge_error(errc::malformed, "letter " + std::to_string(k + 1) + " has sign other than +-1");
  }
}

PlatWord parse_plat(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw bridge_error(errc::malformed, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw bridge_error(errc::malformed, "plat must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw bridge_error(errc::malformed, "plat needs an integer field \"n\"");
  if (!doc.contains("word") || !doc["word"].is_array())
    throw bridge_error(errc::malformed, "plat needs an array field \"word\"");

  PlatWord plat;
  plat.n = doc["n"].get<int>();
  for (const json& entry : doc["word"]) {
    if (!entry.is_number_integer())
      throw bridge_error(errc::malformed, "word entries must be integers");
    int v = entry.get<int>();
    if (v == 0)
      throw bridge_error(errc::malformed, "word entry 0 is not a generator");
    plat.letters.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw bridge_error(errc::malformed, "\"name\" must be a string");
    plat.name = doc["name"].get<std::string>();
  }
  validate(plat);
  return plat;
}

PlatWord read_plat_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw bridge_error(errc::malformed, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_plat(buf.str());
}

std::string serialize_plat(const PlatWord& plat) {
  json doc;
  doc["n"] = plat.n;
  json word = json::array();
  for (const Letter& l : plat.letters)
    word.push_back(l.sign * l.index);
  doc["word"] = word;
  if (!plat.name.empty())
    doc["name"] = plat.name;
  return doc.dump();
}

PlatWord inverse(const PlatWord& plat) {
  PlatWord out{plat.n, {}, plat.name};
  for (auto it = plat.letters.rbegin(); it != plat.letters.rend(); ++it)
    out.letters.push_back({it->index, -it->sign});
  return out;
}

PlatWord mirror(const PlatWord& plat) {
  PlatWord out = plat;
  for (Letter& l : out.letters)
    l.sign = -l.sign;
  return out;
}

PlatWord stabilize(const PlatWord& plat, int sign) {
  validate(plat);
  if (sign != 1 && sign != -1)
    throw bridge_error(errc::malformed, "sign must be +1 or -1");
  PlatWord out = plat;
  out.letters.push_back({2 * plat.n, sign});
  out.n = plat.n + 1;
  return out;
}

PlatWord concat(const PlatWord& first, const PlatWord& second) {
  if (first.n != second.n)
    throw bridge_error(errc::mismatched_bridge_count, "cannot concatenate plats with different n");
  PlatWord out = first;
  out.letters.insert(out.letters.end(), second.letters.begin(), second.letters.end());
  return out;
}

std::pair<PlatWord, PlatWord> split(const PlatWord& plat, std::size_t count) {
  count = std::min(count, plat.letters.size());
  PlatWord head{plat.n, {plat.letters.begin(), plat.letters.begin() + static_cast<long>(count)}, {}};
  PlatWord tail{plat.n, {plat.letters.begin() + static_cast<long>(count), plat.letters.end()}, {}};
  return {head, tail};
}

std::vector<int> strand_permutation(const PlatWord& plat) {
  validate(plat);
  // at[p] = strand currently at position p+1
  std::vector<int> at(plat.strand_count());
  std::iota(at.begin(), at.end(), 1);
  for (const Letter& l : plat.letters)
    std::swap(at[l.index - 1], at[l.index]);
  std::vector<int> perm(plat.strand_count());
  for (int p = 0; p < plat.strand_count(); ++p)
    perm[at[p] - 1] = p + 1;
  return perm;
}

int closure_components(const PlatWord& plat) {
  std::vector<int> perm = strand_permutation(plat);
  int m = plat.strand_count();
  std::vector<int> inv(m);
  for (int s = 0; s < m; ++s)
    inv[perm[s] - 1] = s + 1;

  // Walk: top cap partner, down the strand, bottom cap partner, up the strand.
  auto cap_partner = [](int k) { return k % 2 == 1 ? k + 1 : k - 1; };
  std::vector<bool> seen(m + 1, false);
  int components = 0;
  for (int start = 1; start <= m; ++start) {
    if (seen[start])
      continue;
    ++components;
    int top = start;
    while (!seen[top]) {
      seen[top] = true;
      seen[cap_partner(top)] = true;
      int bottom = perm[cap_partner(top) - 1];
      top = inv[cap_partner(bottom) - 1];
    }
  }
  return components;
}

} // namespace bridge
