#include "sloggen/text.hpp"

#include <cctype>
#include <fstream>

#include "sloggen/errors.hpp"

namespace sloggen {

namespace {

// Code points handled specially by the tokenizer.
constexpr char32_t kRightQuote = 0x2019;  // ’
constexpr char32_t kEllipsis = 0x2026;    // …

// Decodes one UTF-8 code point starting at `pos`; malformed bytes are
// consumed one at a time as their own code points so tokenize stays total.
char32_t decode_utf8(std::string_view s, std::size_t pos, std::size_t* len) {
  const auto byte = static_cast<unsigned char>(s[pos]);
  std::size_t n = 1;
  char32_t cp = byte;
  if (byte >= 0xF0) {
    n = 4;
    cp = byte & 0x07;
  } else if (byte >= 0xE0) {
    n = 3;
    cp = byte & 0x0F;
  } else if (byte >= 0xC0) {
    n = 2;
    cp = byte & 0x1F;
  }
  if (n == 1 || pos + n > s.size()) {
    *len = 1;
    return byte;
  }
  for (std::size_t i = 1; i < n; ++i) {
    const auto cont = static_cast<unsigned char>(s[pos + i]);
    if ((cont & 0xC0) != 0x80) {
      *len = 1;
      return byte;
    }
    cp = (cp << 6) | (cont & 0x3F);
  }
  *len = n;
  return cp;
}

bool always_splits(char32_t cp) {
  return cp == '.' || cp == ',' || cp == '!' || cp == '?' || cp == kEllipsis;
}

bool splits_unless_intra_word(char32_t cp) {
  return cp == '\'' || cp == '-' || cp == kRightQuote;
}

// Word characters keep apostrophes/hyphens attached. Non-ASCII code points
// other than the curly quote and ellipsis count as word characters.
bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return std::isalnum(static_cast<unsigned char>(cp)) != 0;
  }
  return cp != kRightQuote && cp != kEllipsis;
}

bool is_ascii_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

struct CodePoint {
  char32_t value;
  std::size_t offset;
  std::size_t length;
};

std::vector<CodePoint> decode_all(std::string_view chunk) {
  std::vector<CodePoint> cps;
  std::size_t pos = 0;
  while (pos < chunk.size()) {
    std::size_t len = 0;
    const char32_t cp = decode_utf8(chunk, pos, &len);
    cps.push_back({cp, pos, len});
    pos += len;
  }
  return cps;
}

void tokenize_chunk(std::string_view chunk, std::vector<Token>& out) {
  const auto cps = decode_all(chunk);
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      out.push_back(make_token(std::move(current)));
      current.clear();
    }
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const auto& cp = cps[i];
    const std::string_view bytes = chunk.substr(cp.offset, cp.length);
    if (always_splits(cp.value)) {
      flush();
      out.push_back(make_token(std::string(bytes)));
      continue;
    }
    if (splits_unless_intra_word(cp.value)) {
      const bool intra = i > 0 && i + 1 < cps.size() &&
                         is_word_char(cps[i - 1].value) &&
                         is_word_char(cps[i + 1].value);
      if (!intra) {
        flush();
        out.push_back(make_token(std::string(bytes)));
        continue;
      }
    }
    current.append(bytes);
  }
  flush();
}

bool no_space_before(const Token& token) {
  const auto& s = token.surface;
  return s == "." || s == "," || s == "!" || s == "?" || s == "'" ||
         s == "’";
}

bool is_opening_quote(const Token& token) {
  const auto& s = token.surface;
  return s == "\"" || s == "`" || s == "``" || s == "“";
}

bool is_punct_only(const Token& token) {
  for (const auto& cp : decode_all(token.norm)) {
    if (is_word_char(cp.value)) return false;
  }
  return true;
}

bool is_digit_shape(std::string_view norm) {
  bool has_digit = false;
  for (const char c : norm) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      has_digit = true;
    } else if (c != '.' && c != ',' && c != ':' && c != '-' && c != '/' &&
               c != '$' && c != '%') {
      return false;
    }
  }
  return has_digit;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string casefold(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

Token make_token(std::string surface) {
  Token token;
  token.norm = casefold(surface);
  token.surface = std::move(surface);
  return token;
}

std::vector<Token> tokenize(std::string_view raw) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    while (pos < raw.size() && is_ascii_space(raw[pos])) ++pos;
    std::size_t end = pos;
    while (end < raw.size() && !is_ascii_space(raw[end])) ++end;
    if (end > pos) tokenize_chunk(raw.substr(pos, end - pos), tokens);
    pos = end;
  }
  return tokens;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !no_space_before(tokens[i]) &&
        !is_opening_quote(tokens[i - 1])) {
      out += ' ';
    }
    out += tokens[i].surface;
  }
  return out;
}

std::string display_text(const TaggedSentence& sentence) {
  std::string out = sentence.text;
  for (char& c : out) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (static_cast<unsigned char>(c) >= 0x80) break;  // non-ASCII leads
  }
  return out;
}

std::vector<PennTag> skeleton_standard(const TaggedSentence& sentence) {
  std::vector<PennTag> out;
  out.reserve(sentence.tags.size());
  for (const auto& tag : sentence.tags) out.push_back(tag.standard);
  return out;
}

std::vector<UniversalTag> skeleton_universal(const TaggedSentence& sentence) {
  std::vector<UniversalTag> out;
  out.reserve(sentence.tags.size());
  for (const auto& tag : sentence.tags) out.push_back(tag.universal);
  return out;
}

std::string skeleton_key(const TaggedSentence& sentence, Tagset tagset) {
  std::string key;
  key.reserve(sentence.tags.size());
  for (const auto& tag : sentence.tags) {
    key.push_back(tagset == Tagset::Standard
                      ? static_cast<char>(tag.standard)
                      : static_cast<char>(tag.universal));
  }
  return key;
}

Tagger::Tagger(std::unordered_map<std::string, PennTag> lexicon,
               CoarseMap coarse)
    : lexicon_(std::move(lexicon)), coarse_(coarse) {}

Tagger Tagger::load(const std::string& lexicon_path,
                    const std::string& coarse_map_path) {
  CoarseMap coarse = CoarseMap::load(coarse_map_path);

  std::ifstream in(lexicon_path);
  if (!in) throw FileNotFoundError(lexicon_path);

  std::unordered_map<std::string, PennTag> lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(lexicon_path + ":" + std::to_string(line_no) +
                      ": expected word<TAB>PENN_TAG");
    }
    const auto tag = parse_penn_tag(std::string_view(line).substr(tab + 1));
    if (!tag) {
      throw DataError(lexicon_path + ":" + std::to_string(line_no) +
                      ": unknown Penn tag: " + line.substr(tab + 1));
    }
    lexicon.emplace(casefold(line.substr(0, tab)), *tag);
  }
  return Tagger(std::move(lexicon), coarse);
}

std::optional<PennTag> Tagger::lexicon_lookup(std::string_view norm) const {
  const auto it = lexicon_.find(std::string(norm));
  if (it == lexicon_.end()) return std::nullopt;
  return it->second;
}

PennTag Tagger::classify(const Token& token, std::size_t index) const {
  if (is_punct_only(token)) {
    const auto& s = token.norm;
    if (s.find('.') != std::string::npos || s.find('!') != std::string::npos ||
        s.find('?') != std::string::npos) {
      return PennTag::Period;
    }
    if (s.find(',') != std::string::npos) return PennTag::Comma;
    if (s.find('\'') != std::string::npos ||
        s.find('"') != std::string::npos ||
        s.find('`') != std::string::npos ||
        s.find("’") != std::string::npos) {
      return PennTag::Quote;
    }
    return PennTag::Colon;
  }

  if (const auto hit = lexicon_lookup(token.norm)) return *hit;

  const auto& norm = token.norm;
  if (norm.size() >= 3 && ends_with(norm, "ly")) return PennTag::RB;
  if (norm.size() >= 4 && ends_with(norm, "ing")) return PennTag::VBG;
  if (norm.size() >= 3 && ends_with(norm, "ed")) return PennTag::VBD;
  if (norm.size() >= 2 && ends_with(norm, "s")) {
    const auto stem = lexicon_lookup(norm.substr(0, norm.size() - 1));
    if (stem && (*stem == PennTag::NN || *stem == PennTag::NNP)) {
      return PennTag::NNS;
    }
  }
  if (index > 0 && std::isupper(static_cast<unsigned char>(token.surface[0]))) {
    return PennTag::NNP;
  }
  if (is_digit_shape(norm)) return PennTag::CD;
  return PennTag::NN;
}

TaggedSentence Tagger::tag(std::vector<Token> tokens) const {
  if (tokens.empty()) throw EmptyInputError("tag: empty token sequence");

  TaggedSentence sentence;
  sentence.tags.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const PennTag standard = classify(tokens[i], i);
    sentence.tags.push_back({standard, coarse_.map(standard)});
  }
  sentence.text = detokenize(tokens);
  sentence.tokens = std::move(tokens);
  return sentence;
}

TaggedSentence Tagger::tag_text(std::string_view raw) const {
  return tag(tokenize(raw));
}

}  // namespace sloggen
