#ifndef LEXNET_TEXT_PIPELINE_HPP
#define LEXNET_TEXT_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

// Turns raw book text into a clean lemma stream. The pipeline order is
// fixed: tokenize, remove stopwords, lemmatize. Stopword matching therefore
// happens on surface forms; lemma-level stopword lists must be pre-expanded
// by the user.

namespace lexnet {

struct RawDocument {
  std::string id;        // e.g. "B1-EN"
  std::string language;  // ISO-639-1, lowercase
  std::string text;      // may be empty (degenerate but legal)
};

struct StopwordList {
  std::string language;
  std::unordered_set<std::string> words;  // lowercase, no whitespace
};

struct LemmaMap {
  std::string language;
  // surface form -> lemma, both lowercase NFC. Absent keys pass through
  // unchanged on lookup.
  std::unordered_map<std::string, std::string> entries;
};

struct TokenStream {
  std::string doc_id;
  std::vector<std::string> lemmas;
  std::uint64_t count_with_stopwords = 0;
  std::uint64_t count_without_stopwords = 0;  // == lemmas.size()
};

// Splits text into maximal runs of Unicode letters, lowercased. The input is
// NFC-normalized first so decomposed diacritics count as single letters.
// Digits, punctuation, apostrophes and hyphens all act as boundaries and are
// discarded.
std::vector<std::string> tokenize(std::string_view text);

// Drops every token found in the stopword list; order preserved, idempotent.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stopwords);

// Maps each token through the lemma map; unknown tokens pass through.
std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                   const LemmaMap& lemmas);

// Full pipeline. Throws LanguageMismatch when the document, stopword list and
// lemma map do not agree on the language code.
TokenStream preprocess(const RawDocument& doc, const StopwordList& stopwords,
                       const LemmaMap& lemmas);

// One word per line, UTF-8, '#' starts a comment line. Entries are
// normalized (NFC + lowercase); a word with internal whitespace is an error.
StopwordList load_stopwords(const std::filesystem::path& path,
                            std::string language);

// TSV: surface<TAB>lemma per line, '#' starts a comment line. Both columns
// normalized (NFC + lowercase) and must be non-empty. Later entries override
// earlier ones.
LemmaMap load_lemma_map(const std::filesystem::path& path,
                        std::string language);

// Lemma stream file: one lemma per line, UTF-8.
void write_token_stream(const TokenStream& stream,
                        const std::filesystem::path& lemma_file,
                        const std::filesystem::path& counts_json_file);
TokenStream read_token_stream(const std::filesystem::path& lemma_file,
                              std::string doc_id);

std::string counts_sidecar_json(const TokenStream& stream);

// Lowercases an ISO language code and validates it is non-empty ASCII.
std::string normalize_language_code(std::string_view code);

}  // namespace lexnet

#endif  // LEXNET_TEXT_PIPELINE_HPP
