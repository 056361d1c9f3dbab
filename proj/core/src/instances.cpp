#include "landin/instances.hpp"

#include <algorithm>

#include "landin/error.hpp"

namespace landin {

namespace {

const char* kPool = "abcde";
const char* kFreshPool = "pqrstuvw";

SymbolSet pool_subset(Rng& rng, const char* pool, size_t pool_size, int count) {
  std::vector<size_t> order(pool_size);
  for (size_t i = 0; i < pool_size; ++i) order[i] = i;
  for (size_t i = pool_size; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  SymbolSet out;
  for (int i = 0; i < count; ++i)
    out.insert(Symbol::intern(std::string_view(&pool[order[static_cast<size_t>(i)]], 1)));
  return out;
}

SymbolSet random_subset(Rng& rng, const SymbolSet& from, int count) {
  std::vector<Symbol> pool(from.begin(), from.end());
  for (size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
  SymbolSet out;
  for (int i = 0; i < count && i < static_cast<int>(pool.size()); ++i)
    out.insert(pool[static_cast<size_t>(i)]);
  return out;
}

std::string describe(const std::vector<PrefixLanguage>& parts, const SymbolSet& sigma,
                     int depth) {
  std::string out = "|Σ|=" + std::to_string(sigma.size()) + " depth=" + std::to_string(depth) +
                    " parts=";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(parts[i].size());
  }
  return out;
}

}  // namespace

PrefixLanguage random_language(Rng& rng, const SymbolSet& alphabet, int depth, int max_traces) {
  std::vector<Trace> members{Trace()};
  std::set<Trace> traces{Trace()};
  std::vector<Symbol> symbols(alphabet.begin(), alphabet.end());
  if (!symbols.empty()) {
    int target = 1 + static_cast<int>(rng.below(static_cast<size_t>(max_traces)));
    int attempts = 4 * target;
    while (static_cast<int>(traces.size()) < target && attempts-- > 0) {
      const Trace& base = members[rng.below(members.size())];
      if (static_cast<int>(base.size()) >= depth) continue;
      Trace grown = base.append(symbols[rng.below(symbols.size())]);
      if (traces.insert(grown).second) members.push_back(std::move(grown));
    }
  }
  return PrefixLanguage::make(alphabet, std::move(traces), depth);
}

SymbolSet random_run_alphabet(Rng& rng, const GenParams& params) {
  int size = rng.range(2, std::max(2, params.max_alphabet));
  return pool_subset(rng, kPool, 5, std::min(size, 5));
}

PartialAlgebra random_unary_algebra(Rng& rng, const SymbolSet& sigma, int max_carrier) {
  int n = rng.range(1, std::max(1, max_carrier));
  std::vector<std::string> carrier;
  for (int i = 0; i < n; ++i) carrier.push_back("q" + std::to_string(i));
  PartialAlgebra::Entries entries;
  entries["ε"][{}] = "q0";
  for (const Symbol& s : sigma) {
    for (int i = 0; i < n; ++i) {
      if (!rng.chance_in(1, 2)) continue;
      entries[s.name()][{carrier[static_cast<size_t>(i)]}] =
          carrier[rng.below(static_cast<size_t>(n))];
    }
  }
  return PartialAlgebra::make(Signature::language(sigma), carrier, entries);
}

CheckInstance random_instance(Rng& rng, const GenParams& params, CheckId id, int& depth_out) {
  CheckInstance inst;
  inst.sigma = random_run_alphabet(rng, params);
  depth_out = rng.range(2, std::max(2, params.max_depth));

  int components;
  switch (id) {
    case CheckId::charth:
    case CheckId::corollary:
    case CheckId::veccorrth_i:
    case CheckId::veccorrth_ii:
    case CheckId::veccorrth_iii:
    case CheckId::veccorrth_iv:
    case CheckId::lemm4:
    case CheckId::lemm5:
    case CheckId::lemm6:
      components = rng.range(2, std::max(2, params.max_components));
      break;
    default:
      components = rng.range(1, std::max(1, params.max_components));
      break;
  }

  // Keep the product carrier tame when three factors multiply out.
  int budget = components >= 3 ? std::min(params.max_traces, 12) : params.max_traces;
  for (int i = 0; i < components; ++i) {
    int alpha_size = rng.range(1, static_cast<int>(inst.sigma.size()));
    SymbolSet alpha = random_subset(rng, inst.sigma, alpha_size);
    inst.parts.push_back(random_language(rng, alpha, depth_out, budget));
  }

  // The kernel-decomposition statements hold for the canonical presentation
  // of a vector language: components that are exactly the projections, with
  // dead alphabet symbols pruned. Normalize those instances accordingly.
  bool canonical_vfs = id == CheckId::veccorrth_i || id == CheckId::veccorrth_ii ||
                       id == CheckId::veccorrth_iii || id == CheckId::lemm4 ||
                       id == CheckId::lemm5;
  if (canonical_vfs) {
    VectorLanguage v = vfs_saturated(inst.parts);
    SymbolSet fired;
    for (const VectorString& w : v.vectors())
      for (size_t i = 0; i < w.dimension(); ++i)
        for (const Symbol& s : w.part(i).symbols()) fired.insert(s);
    std::vector<PrefixLanguage> projections;
    for (size_t i = 0; i < v.dimension(); ++i) {
      PrefixLanguage component = v.component(i);
      projections.push_back(PrefixLanguage::make(
          set_intersection(component.alphabet(), fired), component.traces(), depth_out));
    }
    inst.parts = std::move(projections);
  }

  // Algebra-shaped checks that are closure- or evaluation-only also run on
  // random unary algebras; cycles and junk elements exercise those paths.
  bool wants_random_algebras =
      (id == CheckId::corrth_iii || id == CheckId::lemm2) && rng.chance_in(1, 2);
  if (wants_random_algebras) {
    int count = rng.range(1, 2);
    for (int i = 0; i < count; ++i)
      inst.algebras.push_back(random_unary_algebra(rng, inst.sigma, 5));
  }

  inst.description = describe(inst.parts, inst.sigma, depth_out) +
                     (inst.algebras.empty() ? "" : " algebras=" + std::to_string(inst.algebras.size()));
  return inst;
}

std::vector<CheckReport> run_suite_for(CheckId id, std::uint64_t seed, int instances,
                                       const GenParams& params) {
  std::vector<CheckReport> reports;
  reports.reserve(static_cast<size_t>(instances));
  for (int i = 0; i < instances; ++i) {
    Rng rng(seed * 1000003ull + static_cast<std::uint64_t>(static_cast<int>(id)) * 10007ull +
            static_cast<std::uint64_t>(i));
    int depth = 0;
    CheckInstance inst = random_instance(rng, params, id, depth);
    inst.description = "i=" + std::to_string(i) + " " + inst.description;
    reports.push_back(run_check(id, inst, depth));
  }
  return reports;
}

std::vector<CheckReport> run_suite(std::uint64_t seed, int instances_per_check,
                                   const GenParams& params) {
  std::vector<CheckReport> reports;
  for (CheckId id : all_check_ids()) {
    std::vector<CheckReport> chunk = run_suite_for(id, seed, instances_per_check, params);
    reports.insert(reports.end(), chunk.begin(), chunk.end());
  }
  return reports;
}

AdjunctionInstance random_adjunction_instance(Rng& rng) {
  SymbolSet source_alpha = pool_subset(rng, kPool, 2, rng.range(1, 2));  // from {a,b}
  int depth = rng.range(2, 3);
  PrefixLanguage source = random_language(rng, source_alpha, depth, 6);

  SymbolSet target_alpha = pool_subset(rng, "cde", 3, rng.range(1, 3));
  std::vector<Symbol> target_pool(target_alpha.begin(), target_alpha.end());

  std::map<Symbol, Trace> images;
  size_t longest = 1;
  for (const Symbol& s : source_alpha) {
    int len = rng.range(0, 2);
    std::vector<Symbol> word;
    for (int i = 0; i < len; ++i) word.push_back(target_pool[rng.below(target_pool.size())]);
    longest = std::max(longest, static_cast<size_t>(len));
    images.emplace(s, Trace(std::move(word)));
  }

  // The target language holds every image, so f simulates by construction;
  // a few extra traces make the instance less special.
  int target_depth = depth * static_cast<int>(longest);
  std::set<Trace> raw;
  for (const Trace& s : source.traces()) {
    Trace image;
    for (size_t i = 0; i < s.size(); ++i) image = image.concat(images.at(s[i]));
    raw.insert(image);
  }
  PrefixLanguage extra = random_language(rng, target_alpha, target_depth, 6);
  raw.insert(extra.traces().begin(), extra.traces().end());
  PrefixLanguage target_lang = PrefixLanguage::closure_of(target_alpha, raw, target_depth);

  SymbolSet sigma = set_union(source_alpha, target_alpha);
  PartialAlgebra algebra = f_of_language(target_lang, sigma);
  PrefixLanguage ga = g_of_algebra(algebra, target_depth);
  Simulation f = Simulation::make(source, ga, images, false, depth);

  AdjunctionInstance inst{std::move(source), std::move(algebra), std::move(f), 1};
  inst.search_bound = static_cast<int>(longest) + 1;
  return inst;
}

NaturalityInstance random_naturality_instance(Rng& rng) {
  SymbolSet source_alpha = pool_subset(rng, kPool, 2, rng.range(1, 2));
  int depth = rng.range(2, 3);
  PrefixLanguage source = random_language(rng, source_alpha, depth, 6);

  SymbolSet target_alpha = pool_subset(rng, "cde", 3, rng.range(1, 3));
  std::vector<Symbol> target_pool(target_alpha.begin(), target_alpha.end());
  std::map<Symbol, Trace> images;
  size_t longest = 1;
  for (const Symbol& s : source_alpha) {
    int len = rng.range(0, 2);
    std::vector<Symbol> word;
    for (int i = 0; i < len; ++i) word.push_back(target_pool[rng.below(target_pool.size())]);
    longest = std::max(longest, static_cast<size_t>(len));
    images.emplace(s, Trace(std::move(word)));
  }
  int target_depth = depth * static_cast<int>(longest);
  std::set<Trace> raw;
  for (const Trace& s : source.traces()) {
    Trace image;
    for (size_t i = 0; i < s.size(); ++i) image = image.concat(images.at(s[i]));
    raw.insert(image);
  }
  PrefixLanguage extra = random_language(rng, target_alpha, target_depth, 5);
  raw.insert(extra.traces().begin(), extra.traces().end());
  PrefixLanguage target_lang = PrefixLanguage::closure_of(target_alpha, raw, target_depth);

  SymbolSet sigma = set_union(source_alpha, target_alpha);
  PartialAlgebra a = f_of_language(source, sigma);
  PartialAlgebra b = f_of_language(target_lang, sigma);
  Simulation f = Simulation::make(source, target_lang, images, false, depth);
  DerivedHom h = functor_f_on_morphism(f, sigma);
  return NaturalityInstance{std::move(a), std::move(b), std::move(h), depth};
}

SquareInstance random_square_instance(Rng& rng) {
  int components = rng.range(2, 3);
  SymbolSet sigma = pool_subset(rng, kPool, 4, rng.range(2, 4));
  int depth = rng.range(2, 3);

  std::vector<PrefixLanguage> source_parts;
  for (int i = 0; i < components; ++i) {
    SymbolSet alpha = random_subset(rng, sigma, rng.range(1, static_cast<int>(sigma.size())));
    source_parts.push_back(random_language(rng, alpha, depth, 8));
  }
  SymbolSet used;
  for (const PrefixLanguage& part : source_parts)
    used.insert(part.alphabet().begin(), part.alphabet().end());

  // Inflate each symbol to a short word of fresh symbols with the same
  // component membership; independence survives because supports do.
  std::map<Symbol, std::vector<Symbol>> op_map;
  std::map<Symbol, Trace> word_of;
  size_t fresh_index = 0;
  size_t longest = 1;
  for (const Symbol& s : used) {
    int len = rng.range(1, 2);
    std::vector<Symbol> word;
    for (int i = 0; i < len; ++i) {
      std::string name(1, kFreshPool[fresh_index % 8]);
      if (fresh_index >= 8) name += std::to_string(fresh_index / 8);
      ++fresh_index;
      word.push_back(Symbol::intern(name));
    }
    longest = std::max(longest, static_cast<size_t>(len));
    op_map.emplace(s, word);
    word_of.emplace(s, Trace(std::move(word)));
  }

  int target_depth = depth * static_cast<int>(longest);
  std::vector<PrefixLanguage> target_parts;
  for (const PrefixLanguage& part : source_parts) {
    SymbolSet alpha;
    for (const Symbol& s : part.alphabet())
      for (const Symbol& t : op_map.at(s)) alpha.insert(t);
    std::set<Trace> image;
    for (const Trace& t : part.traces()) {
      Trace mapped;
      for (size_t i = 0; i < t.size(); ++i) mapped = mapped.concat(word_of.at(t[i]));
      image.insert(mapped);
    }
    target_parts.push_back(PrefixLanguage::closure_of(alpha, image, target_depth));
  }

  // The functor layer reasons about genuine vector languages; saturate so
  // the kernel decompositions underneath F' are valid.
  VectorLanguage source = vfs_saturated(source_parts);
  VectorLanguage target = vfs_saturated(target_parts);
  VectorSimulation f = VectorSimulation::make(std::move(source), std::move(target),
                                              std::move(op_map), false, depth);
  return SquareInstance{std::move(source_parts), std::move(target_parts), std::move(f), depth};
}

}  // namespace landin
