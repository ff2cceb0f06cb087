#include "lexnet/text_pipeline.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lexnet/errors.hpp"
#include "lexnet/unicode.hpp"

namespace lexnet {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string trim_ascii_space(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool has_internal_whitespace(const std::string& s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

std::string normalize_entry(const std::string& raw) {
  return unicode::lower_utf8(unicode::to_nfc(raw));
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open file: " + path.string());
  return in;
}

}  // namespace

std::string normalize_language_code(std::string_view code) {
  if (code.empty()) throw InvalidInput("empty language code");
  std::string out;
  out.reserve(code.size());
  for (char c : code) {
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw InvalidInput("language code must be alphabetic: '" +
                         std::string(code) + "'");
    }
    out.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  const std::string nfc = unicode::to_nfc(text);
  const std::vector<char32_t> cps = unicode::decode_utf8(nfc);

  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : cps) {
    if (unicode::is_letter(cp)) {
      current += unicode::encode_utf8(unicode::to_lower(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stopwords.words.contains(t)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                   const LemmaMap& lemmas) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto it = lemmas.entries.find(t);
    out.push_back(it == lemmas.entries.end() ? t : it->second);
  }
  return out;
}

TokenStream preprocess(const RawDocument& doc, const StopwordList& stopwords,
                       const LemmaMap& lemmas) {
  if (doc.language != stopwords.language || doc.language != lemmas.language) {
    throw LanguageMismatch("language mismatch for document '" + doc.id +
                           "': document=" + doc.language +
                           " stopwords=" + stopwords.language +
                           " lemmas=" + lemmas.language);
  }
  TokenStream stream;
  stream.doc_id = doc.id;
  std::vector<std::string> tokens = tokenize(doc.text);
  stream.count_with_stopwords = tokens.size();
  stream.lemmas = lemmatize(remove_stopwords(tokens, stopwords), lemmas);
  stream.count_without_stopwords = stream.lemmas.size();
  return stream;
}

StopwordList load_stopwords(const std::filesystem::path& path,
                            std::string language) {
  StopwordList list;
  list.language = normalize_language_code(language);
  std::ifstream in = open_or_throw(path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim_ascii_space(strip_cr(line));
    if (line.empty() || line[0] == '#') continue;
    if (has_internal_whitespace(line)) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": stopword contains whitespace: '" + line + "'");
    }
    list.words.insert(normalize_entry(line));
  }
  return list;
}

LemmaMap load_lemma_map(const std::filesystem::path& path,
                        std::string language) {
  LemmaMap map;
  map.language = normalize_language_code(language);
  std::ifstream in = open_or_throw(path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": expected surface<TAB>lemma");
    }
    const std::string surface = normalize_entry(trim_ascii_space(line.substr(0, tab)));
    const std::string lemma = normalize_entry(trim_ascii_space(line.substr(tab + 1)));
    if (surface.empty() || lemma.empty()) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": empty surface form or lemma");
    }
    map.entries.insert_or_assign(surface, lemma);
  }
  return map;
}

void write_token_stream(const TokenStream& stream,
                        const std::filesystem::path& lemma_file,
                        const std::filesystem::path& counts_json_file) {
  {
    std::ofstream out(lemma_file, std::ios::binary);
    if (!out) throw IOError("cannot write file: " + lemma_file.string());
    for (const auto& lemma : stream.lemmas) out << lemma << '\n';
  }
  std::ofstream out(counts_json_file, std::ios::binary);
  if (!out) throw IOError("cannot write file: " + counts_json_file.string());
  out << counts_sidecar_json(stream) << '\n';
}

TokenStream read_token_stream(const std::filesystem::path& lemma_file,
                              std::string doc_id) {
  TokenStream stream;
  stream.doc_id = std::move(doc_id);
  std::ifstream in = open_or_throw(lemma_file);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim_ascii_space(strip_cr(line));
    if (line.empty()) continue;
    if (has_internal_whitespace(line)) {
      throw FormatError(lemma_file.string() + ":" + std::to_string(lineno) +
                        ": lemma contains whitespace: '" + line + "'");
    }
    stream.lemmas.push_back(line);
  }
  stream.count_with_stopwords = stream.lemmas.size();
  stream.count_without_stopwords = stream.lemmas.size();
  return stream;
}

std::string counts_sidecar_json(const TokenStream& stream) {
  nlohmann::json j;
  j["book"] = stream.doc_id;
  j["with_stopwords"] = stream.count_with_stopwords;
  j["without_stopwords"] = stream.count_without_stopwords;
  return j.dump(2);
}

}  // namespace lexnet
