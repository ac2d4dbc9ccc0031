// Shared helpers and brute-force oracles for the test binaries.
#ifndef VFENRICH_TESTS_SUPPORT_HPP
#define VFENRICH_TESTS_SUPPORT_HPP

#include <filesystem>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vfenrich/chunker.hpp"
#include "vfenrich/lexicon.hpp"
#include "vfenrich/text.hpp"

namespace testing {

std::filesystem::path data_dir();
const vfe::Lexicon& toy_lexicon();
const vfe::NeConfig& toy_ne();

/// Sentence over hand-tagged tokens, text = surfaces joined by spaces.
vfe::Sentence make_sentence(const std::vector<std::pair<std::string, vfe::Tag>>& tokens,
                            const std::string& doc = "t", std::size_t index = 0);
/// Raw text through the full preprocessing chain, expecting one sentence.
vfe::Sentence prep(const std::string& text);

vfe::Sentence random_sentence(std::mt19937& rng, std::size_t max_len);

// Chunk identity plus case bitmask (bit order nom, gen, dat, acc).
using ChunkKey = std::tuple<vfe::ChunkKind, std::size_t, std::size_t, unsigned>;

/// Every NP/PP span derivable under `rules`, found by exhaustive
/// span/rule/split enumeration, with case sets from an independent table.
std::set<ChunkKey> derivable_chunks(const vfe::Sentence& s,
                                    const std::vector<vfe::GrammarRule>& rules);
std::set<ChunkKey> chart_chunks(const vfe::ChartResult& r);

using SpanList = std::vector<std::pair<std::size_t, std::size_t>>;
/// All maximal coverings over the given spans by subset enumeration.
std::set<SpanList> maximal_coverings(const SpanList& spans);

/// Acyclic random noun lexicon with `n` synsets ("s00".."s49").
std::vector<vfe::Synset> random_synsets(std::mt19937& rng, std::size_t n);
std::optional<std::string> lcs_oracle(const std::vector<vfe::Synset>& synsets,
                                      const std::string& a, const std::string& b);

struct CommandResult {
  int status = 0;
  std::string out;
};
/// Runs a shell command; stderr is discarded unless redirected in `cmd`.
CommandResult run(const std::string& cmd);
std::string cli();
std::string read_file(const std::filesystem::path& p);

}  // namespace testing

#endif
