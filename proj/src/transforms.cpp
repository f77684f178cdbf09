#include "attractor/transforms.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "attractor/error.hpp"

namespace attractor {

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::string:
      return "string";
    case Shape::circular:
      return "circular";
    case Shape::set:
      return "set";
  }
  return "?";
}

Shape parse_shape(std::string_view name) {
  if (name == "string") return Shape::string;
  if (name == "circular") return Shape::circular;
  if (name == "set") return Shape::set;
  throw InvalidParameter("unknown shape '" + std::string(name) + "'");
}

Shape shape_of(const Instance& instance) {
  if (std::holds_alternative<Text>(instance)) return Shape::string;
  if (std::holds_alternative<CircularText>(instance)) return Shape::circular;
  return Shape::set;
}

namespace {

SymbolId next_free_symbol(const Instance& instance) {
  SymbolId next = 0;
  auto scan = [&](const Word& w) {
    for (auto s : w) next = std::max(next, s + 1);
  };
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, StringSet>) {
          for (const auto& t : inst.texts()) scan(t.symbols());
        } else {
          scan(inst.symbols());
        }
      },
      instance);
  return next;
}

// Concatenates the texts with one fresh delimiter after each of the first
// `delimited` texts.
TransformResult stitch(const StringSet& texts, std::size_t delimited, bool circular,
                       std::optional<SymbolId> first_fresh) {
  TransformResult tr{texts, Text{}, 0, {}, {}};
  SymbolId fresh = first_fresh.value_or(next_free_symbol(texts));
  Word out;
  for (std::size_t x = 0; x < texts.count(); ++x) {
    const auto& t = texts.texts()[x];
    for (std::size_t p = 1; p <= t.size(); ++p) {
      out.push_back(t.at(p));
      tr.position_map.emplace_back(
          Site{static_cast<std::uint32_t>(x + 1), static_cast<std::uint32_t>(p)});
    }
    if (x < delimited) {
      out.push_back(fresh);
      tr.delimiters.push_back(fresh);
      tr.position_map.emplace_back(std::nullopt);
      ++fresh;
    }
  }
  tr.size_offset = delimited;
  if (circular) {
    tr.target = CircularText(std::move(out));
  } else {
    tr.target = Text(std::move(out));
  }
  return tr;
}

std::size_t site_index(const Instance& instance, Site site) {
  std::size_t index = 0;
  bool found = false;
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, StringSet>) {
          if (site.text >= 1 && site.text <= inst.count() && site.pos >= 1 &&
              site.pos <= inst.texts()[site.text - 1].size()) {
            for (std::size_t x = 0; x + 1 < site.text; ++x) index += inst.texts()[x].size();
            index += site.pos - 1;
            found = true;
          }
        } else {
          if (site.text == 1 && site.pos >= 1 && site.pos <= inst.size()) {
            index = site.pos - 1;
            found = true;
          }
        }
      },
      instance);
  if (!found) {
    throw InvalidParameter("site " + std::to_string(site.text) + ":" + std::to_string(site.pos) +
                           " is outside the instance");
  }
  return index;
}

std::string render_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace

const std::optional<Site>& TransformResult::source_of(Site target_site) const {
  return position_map.at(site_index(target, target_site));
}

std::vector<Site> TransformResult::forced_sites() const {
  std::vector<Site> out;
  const auto sites = all_sites(target);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (!position_map[i]) out.push_back(sites[i]);
  }
  return out;
}

TransformResult set_to_string(const StringSet& texts, std::optional<SymbolId> first_fresh) {
  return stitch(texts, texts.count() - 1, false, first_fresh);
}

TransformResult string_to_circular(const Text& text, std::optional<SymbolId> first_fresh) {
  auto tr = stitch(StringSet({text}), 1, true, first_fresh);
  tr.source = text;
  return tr;
}

TransformResult set_to_circular(const StringSet& texts, std::optional<SymbolId> first_fresh) {
  return stitch(texts, texts.count(), true, first_fresh);
}

TransformResult circular_to_string(const CircularText& text) {
  const std::size_t n = text.size();
  Word out;
  std::vector<std::optional<Site>> map;
  for (std::size_t copy = 0; copy < 3; ++copy) {
    for (std::size_t p = 1; p <= n; ++p) {
      out.push_back(text.at(p));
      map.emplace_back(Site{1, static_cast<std::uint32_t>(p)});
    }
  }
  return TransformResult{text, Text(std::move(out)), 0, std::move(map), {}};
}

TransformResult string_to_set(const Text& text) {
  std::vector<std::optional<Site>> map;
  for (std::size_t p = 1; p <= text.size(); ++p) {
    map.emplace_back(Site{1, static_cast<std::uint32_t>(p)});
  }
  return TransformResult{text, StringSet({text}), 0, std::move(map), {}};
}

TransformResult circular_to_set(const CircularText& text) {
  auto tr = circular_to_string(text);
  tr.target = StringSet({std::get<Text>(tr.target)});
  return tr;
}

TransformResult identity_transform(const Instance& instance) {
  std::vector<std::optional<Site>> map;
  for (const auto& s : all_sites(instance)) map.emplace_back(s);
  return TransformResult{instance, instance, 0, std::move(map), {}};
}

TransformResult transform(const Instance& source, Shape target,
                          std::optional<SymbolId> first_fresh) {
  const Shape from = shape_of(source);
  if (from == target) return identity_transform(source);
  switch (from) {
    case Shape::string:
      return target == Shape::circular ? string_to_circular(std::get<Text>(source), first_fresh)
                                       : string_to_set(std::get<Text>(source));
    case Shape::circular:
      return target == Shape::string ? circular_to_string(std::get<CircularText>(source))
                                     : circular_to_set(std::get<CircularText>(source));
    case Shape::set:
      return target == Shape::string ? set_to_string(std::get<StringSet>(source), first_fresh)
                                     : set_to_circular(std::get<StringSet>(source), first_fresh);
  }
  throw InvalidParameter("unsupported transformation");
}

Marking lift_solution(const TransformResult& tr, const Marking& target_marking, std::size_t k,
                      bool sharp) {
  const auto verdict = verify_attractor(tr.target, target_marking, k, sharp);
  if (!verdict) {
    throw CertificateRejected("target marking leaves substring [" + render_word(*verdict.witness) +
                                  "] uncovered",
                              verdict.witness);
  }

  // Delimiters must be marked; move an adjacent mark onto an unmarked one when
  // the result still verifies.
  Marking marking = target_marking;
  const auto sites = all_sites(tr.target);
  const bool circular = std::holds_alternative<CircularText>(tr.target);
  for (const auto& forced : tr.forced_sites()) {
    if (marking.contains(forced)) continue;
    const std::size_t index = site_index(tr.target, forced);
    std::vector<std::size_t> neighbours;
    if (index > 0) neighbours.push_back(index - 1);
    if (index + 1 < sites.size()) neighbours.push_back(index + 1);
    if (circular && index == 0) neighbours.push_back(sites.size() - 1);
    if (circular && index + 1 == sites.size()) neighbours.push_back(0);
    bool moved = false;
    for (auto nb : neighbours) {
      if (!marking.contains(sites[nb])) continue;
      std::vector<Site> candidate;
      for (const auto& s : marking.sites()) {
        if (!(s == sites[nb])) candidate.push_back(s);
      }
      candidate.push_back(forced);
      Marking trial(std::move(candidate));
      if (verify_attractor(tr.target, trial, k, sharp)) {
        marking = std::move(trial);
        moved = true;
        break;
      }
    }
    if (!moved) {
      throw CertificateRejected("delimiter at position " + std::to_string(forced.pos) +
                                " is not marked and cannot be normalized");
    }
  }

  std::vector<Site> lifted;
  for (const auto& s : marking.sites()) {
    if (const auto& src = tr.source_of(s)) lifted.push_back(*src);
  }
  Marking result(std::move(lifted));

  std::size_t source_k = k;
  if (const auto* c = std::get_if<CircularText>(&tr.source)) source_k = std::min(k, c->size());
  if (!verify_attractor(tr.source, result, source_k, sharp)) {
    throw SoundnessError("lifted marking is not an attractor of the source instance");
  }
  return result;
}

Marking embed_solution(const TransformResult& tr, const Marking& source_marking) {
  check_marking_in_range(tr.source, source_marking);
  const auto sites = all_sites(tr.target);
  std::map<Site, std::vector<std::size_t>> images;
  std::vector<Site> out;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (tr.position_map[i]) {
      images[*tr.position_map[i]].push_back(i);
    } else {
      out.push_back(sites[i]);
    }
  }
  // Several images (tripling): use the middle copy.
  for (const auto& s : source_marking.sites()) {
    const auto& imgs = images.at(s);
    out.push_back(sites[imgs[imgs.size() / 2]]);
  }
  return Marking(std::move(out));
}

}  // namespace attractor
