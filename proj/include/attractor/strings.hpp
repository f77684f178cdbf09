#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace attractor {

using SymbolId = std::uint32_t;

/// A plain symbol sequence. Used for substrings and witnesses.
using Word = std::vector<SymbolId>;

/// Linear string, positions 1..n.
class Text {
 public:
  Text() = default;
  explicit Text(Word symbols) : symbols_(std::move(symbols)) {}
  Text(std::initializer_list<SymbolId> symbols) : symbols_(symbols) {}

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Word& symbols() const { return symbols_; }

  /// 1-based access; throws InvalidParameter outside [1, n].
  SymbolId at(std::size_t pos) const;
  /// T[i..j], 1-based and inclusive.
  Word substring(std::size_t i, std::size_t j) const;

  friend bool operator==(const Text&, const Text&) = default;

 private:
  Word symbols_;
};

/// String read cyclically; n >= 1.
class CircularText {
 public:
  explicit CircularText(Word symbols);

  std::size_t size() const { return symbols_.size(); }
  const Word& symbols() const { return symbols_; }
  SymbolId at(std::size_t pos) const;
  /// Substring of length `len` starting at 1-based `start`, wrapping modulo n.
  Word substring(std::size_t start, std::size_t len) const;

  friend bool operator==(const CircularText&, const CircularText&) = default;

 private:
  Word symbols_;
};

/// Ordered collection of m >= 1 texts over one alphabet.
class StringSet {
 public:
  explicit StringSet(std::vector<Text> texts);

  std::size_t count() const { return texts_.size(); }
  const std::vector<Text>& texts() const { return texts_; }
  /// 1-based text index.
  const Text& text(std::size_t x) const;
  std::size_t total_length() const;

  friend bool operator==(const StringSet&, const StringSet&) = default;

 private:
  std::vector<Text> texts_;
};

using Instance = std::variant<Text, CircularText, StringSet>;

/// A marked position. `text` is 1 for single-string instances.
struct Site {
  std::uint32_t text = 1;
  std::uint32_t pos = 1;
  friend auto operator<=>(const Site&, const Site&) = default;
};

/// Canonical (sorted, duplicate-free) set of sites.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::vector<Site> sites);
  static Marking from_positions(std::span<const std::size_t> positions);
  static Marking from_positions(std::initializer_list<std::size_t> positions);

  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  const std::vector<Site>& sites() const { return sites_; }
  bool contains(Site s) const;
  /// Positions only; meaningful for single-string markings.
  std::vector<std::size_t> positions() const;

  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::vector<Site> sites_;
};

/// Number of sites (positions) in the instance.
std::size_t total_sites(const Instance& instance);

/// Every site of the instance in canonical order.
std::vector<Site> all_sites(const Instance& instance);

/// Throws InvalidParameter if any site lies outside the instance.
void check_marking_in_range(const Instance& instance, const Marking& marking);

/// Distinct substrings of length 1..k (exactly k when `sharp`), sorted by
/// symbol id lexicographically with prefixes first.
std::vector<Word> distinct_substrings(const Instance& instance, std::size_t k, bool sharp = false);

struct Verdict {
  bool valid = false;
  /// Lexicographically smallest uncovered substring when invalid.
  std::optional<Word> witness;
  explicit operator bool() const { return valid; }
};

Verdict verify_attractor(const Instance& instance, const Marking& marking, std::size_t k,
                         bool sharp = false);

/// Set-cover view of an attractor instance: one element per distinct
/// substring, one candidate per site listing the elements that have an
/// occurrence crossing it.
struct CoverInstance {
  std::vector<Word> elements;
  std::vector<Site> sites;
  std::vector<std::vector<std::uint32_t>> candidates;
};

CoverInstance build_cover_instance(const Instance& instance, std::size_t k, bool sharp = false);

/// Length of the longest text (or n for single strings); the "full" k.
std::size_t full_length(const Instance& instance);

}  // namespace attractor
