#include "attractor/strings.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "attractor/error.hpp"

namespace attractor {

SymbolId Text::at(std::size_t pos) const {
  if (pos < 1 || pos > symbols_.size()) {
    throw InvalidParameter("text position " + std::to_string(pos) + " outside [1, " +
                           std::to_string(symbols_.size()) + "]");
  }
  return symbols_[pos - 1];
}

Word Text::substring(std::size_t i, std::size_t j) const {
  if (i < 1 || i > j || j > symbols_.size()) {
    throw InvalidParameter("substring [" + std::to_string(i) + ".." + std::to_string(j) +
                           "] undefined for length " + std::to_string(symbols_.size()));
  }
  return Word(symbols_.begin() + static_cast<std::ptrdiff_t>(i - 1),
              symbols_.begin() + static_cast<std::ptrdiff_t>(j));
}

CircularText::CircularText(Word symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidParameter("circular text must be non-empty");
}

SymbolId CircularText::at(std::size_t pos) const {
  if (pos < 1 || pos > symbols_.size()) {
    throw InvalidParameter("circular position " + std::to_string(pos) + " out of range");
  }
  return symbols_[pos - 1];
}

Word CircularText::substring(std::size_t start, std::size_t len) const {
  const std::size_t n = symbols_.size();
  if (start < 1 || start > n || len > n) {
    throw InvalidParameter("circular substring out of range");
  }
  Word out;
  out.reserve(len);
  for (std::size_t l = 0; l < len; ++l) out.push_back(symbols_[(start - 1 + l) % n]);
  return out;
}

StringSet::StringSet(std::vector<Text> texts) : texts_(std::move(texts)) {
  if (texts_.empty()) throw InvalidParameter("string set must contain at least one text");
}

const Text& StringSet::text(std::size_t x) const {
  if (x < 1 || x > texts_.size()) {
    throw InvalidParameter("text index " + std::to_string(x) + " out of range");
  }
  return texts_[x - 1];
}

std::size_t StringSet::total_length() const {
  std::size_t total = 0;
  for (const auto& t : texts_) total += t.size();
  return total;
}

Marking::Marking(std::vector<Site> sites) : sites_(std::move(sites)) {
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
}

Marking Marking::from_positions(std::span<const std::size_t> positions) {
  std::vector<Site> sites;
  sites.reserve(positions.size());
  for (auto p : positions) sites.push_back(Site{1, static_cast<std::uint32_t>(p)});
  return Marking(std::move(sites));
}

Marking Marking::from_positions(std::initializer_list<std::size_t> positions) {
  return from_positions(std::span<const std::size_t>(positions.begin(), positions.size()));
}

bool Marking::contains(Site s) const { return std::binary_search(sites_.begin(), sites_.end(), s); }

std::vector<std::size_t> Marking::positions() const {
  std::vector<std::size_t> out;
  out.reserve(sites_.size());
  for (const auto& s : sites_) out.push_back(s.pos);
  return out;
}

namespace {

struct Strand {
  std::span<const SymbolId> symbols;
  bool circular = false;
};

std::vector<Strand> strands_of(const Instance& instance) {
  std::vector<Strand> out;
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, Text>) {
          out.push_back({inst.symbols(), false});
        } else if constexpr (std::is_same_v<T, CircularText>) {
          out.push_back({inst.symbols(), true});
        } else {
          for (const auto& t : inst.texts()) out.push_back({t.symbols(), false});
        }
      },
      instance);
  return out;
}

void check_k(const Instance& instance, std::size_t k) {
  if (k == 0) throw InvalidParameter("k must be positive");
  if (const auto* c = std::get_if<CircularText>(&instance); c && k > c->size()) {
    throw InvalidParameter("k = " + std::to_string(k) + " exceeds circular length " +
                           std::to_string(c->size()));
  }
}

// Trie over all substrings of length <= k; every node is one distinct substring.
class SubstringTrie {
 public:
  SubstringTrie() {
    parent_.push_back(0);
    last_.push_back(0);
    depth_.push_back(0);
  }

  std::uint32_t child(std::uint32_t node, SymbolId symbol) {
    const std::uint64_t key = (static_cast<std::uint64_t>(node) << 32) | symbol;
    auto [it, inserted] = edges_.try_emplace(key, static_cast<std::uint32_t>(parent_.size()));
    if (inserted) {
      parent_.push_back(node);
      last_.push_back(symbol);
      depth_.push_back(depth_[node] + 1);
    }
    return it->second;
  }

  std::size_t size() const { return parent_.size(); }
  std::uint32_t depth(std::uint32_t node) const { return depth_[node]; }

  Word word(std::uint32_t node) const {
    Word w(depth_[node]);
    for (std::size_t i = w.size(); i > 0; --i) {
      w[i - 1] = last_[node];
      node = parent_[node];
    }
    return w;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<SymbolId> last_;
  std::vector<std::uint32_t> depth_;
  std::unordered_map<std::uint64_t, std::uint32_t> edges_;
};

// Calls visit(strand_index, start, length, node) for every occurrence of
// every substring of length <= k. `start` is 0-based.
template <typename Visit>
void for_each_occurrence(const std::vector<Strand>& strands, std::size_t k, SubstringTrie& trie,
                         Visit&& visit) {
  for (std::size_t x = 0; x < strands.size(); ++x) {
    const auto& sym = strands[x].symbols;
    const std::size_t n = sym.size();
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t max_len = strands[x].circular ? std::min(k, n) : std::min(k, n - s);
      std::uint32_t node = 0;
      for (std::size_t l = 1; l <= max_len; ++l) {
        node = trie.child(node, sym[(s + l - 1) % n]);
        visit(x, s, l, node);
      }
    }
  }
}

bool is_element(const SubstringTrie& trie, std::uint32_t node, std::size_t k, bool sharp) {
  return node != 0 && (!sharp || trie.depth(node) == k);
}

}  // namespace

std::size_t total_sites(const Instance& instance) {
  std::size_t total = 0;
  for (const auto& s : strands_of(instance)) total += s.symbols.size();
  return total;
}

std::vector<Site> all_sites(const Instance& instance) {
  std::vector<Site> out;
  const auto strands = strands_of(instance);
  for (std::size_t x = 0; x < strands.size(); ++x) {
    for (std::size_t p = 1; p <= strands[x].symbols.size(); ++p) {
      out.push_back(Site{static_cast<std::uint32_t>(x + 1), static_cast<std::uint32_t>(p)});
    }
  }
  return out;
}

std::size_t full_length(const Instance& instance) {
  std::size_t best = 0;
  for (const auto& s : strands_of(instance)) best = std::max(best, s.symbols.size());
  return best;
}

void check_marking_in_range(const Instance& instance, const Marking& marking) {
  const auto strands = strands_of(instance);
  for (const auto& site : marking.sites()) {
    if (site.text < 1 || site.text > strands.size() || site.pos < 1 ||
        site.pos > strands[site.text - 1].symbols.size()) {
      throw InvalidParameter("marked position " + std::to_string(site.text) + ":" +
                             std::to_string(site.pos) + " is out of range");
    }
  }
}

std::vector<Word> distinct_substrings(const Instance& instance, std::size_t k, bool sharp) {
  check_k(instance, k);
  const auto strands = strands_of(instance);
  SubstringTrie trie;
  for_each_occurrence(strands, k, trie, [](auto, auto, auto, auto) {});
  std::vector<Word> out;
  for (std::uint32_t node = 1; node < trie.size(); ++node) {
    if (is_element(trie, node, k, sharp)) out.push_back(trie.word(node));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict verify_attractor(const Instance& instance, const Marking& marking, std::size_t k,
                         bool sharp) {
  check_k(instance, k);
  check_marking_in_range(instance, marking);
  const auto strands = strands_of(instance);

  // next_mark[x][i]: smallest marked 0-based index >= i, over a doubled range
  // for circular strands so wrapping occurrences are handled uniformly.
  std::vector<std::vector<std::size_t>> next_mark(strands.size());
  for (std::size_t x = 0; x < strands.size(); ++x) {
    const std::size_t n = strands[x].symbols.size();
    const std::size_t span = strands[x].circular ? 2 * n : n;
    std::vector<bool> marked(span, false);
    for (const auto& site : marking.sites()) {
      if (site.text != x + 1) continue;
      marked[site.pos - 1] = true;
      if (strands[x].circular) marked[site.pos - 1 + n] = true;
    }
    auto& nm = next_mark[x];
    nm.assign(span + 1, span);
    for (std::size_t i = span; i > 0; --i) nm[i - 1] = marked[i - 1] ? i - 1 : nm[i];
  }

  SubstringTrie trie;
  std::vector<bool> covered;
  for_each_occurrence(strands, k, trie, [&](std::size_t x, std::size_t s, std::size_t l,
                                            std::uint32_t node) {
    if (covered.size() <= node) covered.resize(node + 1, false);
    if (!covered[node] && next_mark[x][s] <= s + l - 1) covered[node] = true;
  });
  covered.resize(trie.size(), false);

  std::optional<Word> witness;
  for (std::uint32_t node = 1; node < trie.size(); ++node) {
    if (covered[node] || !is_element(trie, node, k, sharp)) continue;
    Word w = trie.word(node);
    if (!witness || w < *witness) witness = std::move(w);
  }
  return Verdict{!witness.has_value(), std::move(witness)};
}

CoverInstance build_cover_instance(const Instance& instance, std::size_t k, bool sharp) {
  check_k(instance, k);
  const auto strands = strands_of(instance);
  std::vector<std::size_t> base(strands.size() + 1, 0);
  for (std::size_t x = 0; x < strands.size(); ++x) base[x + 1] = base[x] + strands[x].symbols.size();

  struct Occurrence {
    std::uint32_t node;
    std::uint32_t strand;
    std::uint32_t start;
    std::uint32_t length;
  };
  SubstringTrie trie;
  std::vector<Occurrence> occurrences;
  for_each_occurrence(strands, k, trie, [&](std::size_t x, std::size_t s, std::size_t l,
                                            std::uint32_t node) {
    if (is_element(trie, node, k, sharp)) {
      occurrences.push_back({node, static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(s),
                             static_cast<std::uint32_t>(l)});
    }
  });

  CoverInstance out;
  std::vector<std::uint32_t> nodes;
  for (std::uint32_t node = 1; node < trie.size(); ++node) {
    if (is_element(trie, node, k, sharp)) nodes.push_back(node);
  }
  std::vector<std::pair<Word, std::uint32_t>> keyed;
  keyed.reserve(nodes.size());
  for (auto node : nodes) keyed.emplace_back(trie.word(node), node);
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::uint32_t> element_of(trie.size(), 0);
  out.elements.reserve(keyed.size());
  for (std::uint32_t e = 0; e < keyed.size(); ++e) {
    element_of[keyed[e].second] = e;
    out.elements.push_back(std::move(keyed[e].first));
  }

  out.sites = all_sites(instance);
  out.candidates.assign(out.sites.size(), {});
  for (const auto& occ : occurrences) {
    const std::size_t n = strands[occ.strand].symbols.size();
    for (std::size_t i = 0; i < occ.length; ++i) {
      const std::size_t local = (occ.start + i) % n;
      out.candidates[base[occ.strand] + local].push_back(element_of[occ.node]);
    }
  }
  for (auto& c : out.candidates) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return out;
}

}  // namespace attractor
