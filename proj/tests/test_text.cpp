#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sloggen/errors.hpp"
#include "sloggen/tags.hpp"
#include "sloggen/text.hpp"

#include "test_util.hpp"

using namespace sloggen;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

}  // namespace

TEST_CASE("tokenize splits on whitespace") {
  CHECK(surfaces(tokenize("The magic of witchcraft")) ==
        std::vector<std::string>{"The", "magic", "of", "witchcraft"});
}

TEST_CASE("tokenize of empty input is empty") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t\n  ").empty());
}

TEST_CASE("tokenize splits punctuation into separate tokens") {
  // Hand-applied rules: the comma detaches, every word stays whole.
  CHECK(surfaces(tokenize("Melts in your mouth, not in your hands")) ==
        std::vector<std::string>{"Melts", "in", "your", "mouth", ",", "not",
                                 "in", "your", "hands"});
  CHECK(surfaces(tokenize("Hello!")) == std::vector<std::string>{"Hello", "!"});
  CHECK(surfaces(tokenize("Really?!")) ==
        std::vector<std::string>{"Really", "?", "!"});
}

TEST_CASE("intra-word apostrophes and hyphens stay attached") {
  CHECK(surfaces(tokenize("everyone's")) ==
        std::vector<std::string>{"everyone's"});
  CHECK(surfaces(tokenize("well-known brand")) ==
        std::vector<std::string>{"well-known", "brand"});
  CHECK(surfaces(tokenize("everyone’s magic")) ==
        std::vector<std::string>{"everyone’s", "magic"});
  // Leading/trailing marks split off.
  CHECK(surfaces(tokenize("dogs' day")) ==
        std::vector<std::string>{"dogs", "'", "day"});
  CHECK(surfaces(tokenize("stop - go")) ==
        std::vector<std::string>{"stop", "-", "go"});
}

TEST_CASE("ellipsis splits as its own token") {
  CHECK(surfaces(tokenize("wait… now")) ==
        std::vector<std::string>{"wait", "…", "now"});
}

TEST_CASE("norm is the case-folded surface") {
  const auto tokens = tokenize("Run run RUN");
  REQUIRE(tokens.size() == 3);
  for (const auto& t : tokens) CHECK(t.norm == "run");
}

TEST_CASE("tokenize is total on arbitrary bytes") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::string bytes;
    const std::size_t len = rng.bounded(24);
    for (std::size_t i = 0; i < len; ++i) {
      bytes.push_back(static_cast<char>(rng.bounded(256)));
    }
    const auto tokens = tokenize(bytes);
    for (const auto& t : tokens) {
      CHECK(!t.surface.empty());
      for (const char c : t.surface) {
        CHECK(!std::isspace(static_cast<unsigned char>(c)));
      }
    }
  }
}

TEST_CASE("detokenize round-trips tokenizer output") {
  const std::vector<std::string> raws = {
      "Melts in your mouth, not in your hands",
      "The magic of witchcraft",
      "Quality you can trust.",
      "Wait… what?",
      "everyone's favorite!",
      "Less waiting. More living.",
  };
  for (const auto& raw : raws) {
    const auto tokens = tokenize(raw);
    const auto text = detokenize(tokens);
    CHECK(tokenize(text) == tokens);
  }

  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto tokens = testutil::random_tokens(rng, 1, 10);
    const auto text = detokenize(tokens);
    const auto again = tokenize(text);
    CHECK(surfaces(again) == surfaces(tokens));
  }
}

TEST_CASE("detokenize places no space before closing punctuation") {
  const auto tokens = tokenize("Melts in your mouth, not in your hands");
  CHECK(detokenize(tokens) == "Melts in your mouth, not in your hands");
  CHECK(detokenize(tokenize("Go now!")) == "Go now!");
}

TEST_CASE("tagging matches the reference tags for known sentences") {
  const auto sent = testutil::tagger().tag_text("Diamonds are forever");
  REQUIRE(sent.tags.size() == 3);
  CHECK(sent.tags[0].standard == PennTag::NNS);
  CHECK(sent.tags[1].standard == PennTag::VBP);
  CHECK(sent.tags[2].standard == PennTag::RB);
}

TEST_CASE("single known word gets its lexicon tag") {
  const auto sent = testutil::tagger().tag_text("witchcraft");
  REQUIRE(sent.tags.size() == 1);
  CHECK(sent.tags[0].standard == PennTag::NN);
  CHECK(sent.tags[0].universal == UniversalTag::NOUN);
}

TEST_CASE("tag throws on empty input") {
  CHECK_THROWS_AS(testutil::tagger().tag({}), EmptyInputError);
}

TEST_CASE("fallback rules fire in the documented order") {
  // A tagger whose lexicon holds only two noun stems isolates the rules.
  const auto lexicon_path = testutil::write_temp_file(
      "sloggen_rules_lexicon.tsv", "wug\tNN\nblick\tNN\n");
  const Tagger rules = Tagger::load(
      lexicon_path, testutil::data_path("penn_to_universal.tsv"));

  auto tag_of = [&](const std::string& word, std::size_t index = 0) {
    std::vector<Token> tokens;
    if (index > 0) tokens.push_back(make_token("first"));
    tokens.push_back(make_token(word));
    return rules.tag(std::move(tokens)).tags[index].standard;
  };

  CHECK(tag_of("strangely") == PennTag::RB);
  CHECK(tag_of("zorping") == PennTag::VBG);
  CHECK(tag_of("zorped") == PennTag::VBD);
  CHECK(tag_of("wugs") == PennTag::NNS);      // known noun stem + s
  CHECK(tag_of("zorps") == PennTag::NN);      // unknown stem, default
  CHECK(tag_of("Zorp", 1) == PennTag::NNP);   // capitalized mid-sentence
  CHECK(tag_of("Zorp", 0) == PennTag::NN);    // sentence-initial is ambiguous
  CHECK(tag_of("1984") == PennTag::CD);
  CHECK(tag_of("3.5") == PennTag::CD);
  CHECK(tag_of("zorp") == PennTag::NN);
}

TEST_CASE("out-of-lexicon -ly words always tag RB") {
  const auto lexicon_path =
      testutil::write_temp_file("sloggen_empty_lexicon.tsv", "");
  const Tagger rules = Tagger::load(
      lexicon_path, testutil::data_path("penn_to_universal.tsv"));
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::string word;
    const std::size_t len = 1 + rng.bounded(6);
    for (std::size_t i = 0; i < len; ++i) {
      word.push_back(static_cast<char>('a' + rng.bounded(26)));
    }
    word += "ly";
    const auto sent = rules.tag({make_token(word)});
    CHECK(sent.tags[0].standard == PennTag::RB);
  }
}

TEST_CASE("punctuation tokens get punctuation tags") {
  const auto& tagger = testutil::tagger();
  CHECK(tagger.tag_text("go !").tags[1].standard == PennTag::Period);
  CHECK(tagger.tag_text("go .").tags[1].standard == PennTag::Period);
  CHECK(tagger.tag_text("go ,").tags[1].standard == PennTag::Comma);
  CHECK(tagger.tag_text("go -").tags[1].standard == PennTag::Colon);
  CHECK(tagger.tag_text("go '").tags[1].standard == PennTag::Quote);
  CHECK(tagger.tag_text("go ,").tags[1].universal == UniversalTag::Punct);
}

TEST_CASE("universal skeleton of a known sentence") {
  const auto sent = testutil::tagger().tag_text("The magic of witchcraft");
  CHECK(skeleton_universal(sent) ==
        std::vector<UniversalTag>{UniversalTag::DET, UniversalTag::NOUN,
                                  UniversalTag::ADP, UniversalTag::NOUN});
}

TEST_CASE("skeleton length equals token count") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sent = testutil::random_sentence(rng);
    CHECK(skeleton_standard(sent).size() == sent.tokens.size());
    CHECK(skeleton_universal(sent).size() == sent.tokens.size());
    CHECK(skeleton_key(sent, Tagset::Standard).size() == sent.tokens.size());
  }
}

TEST_CASE("coarse consistency: mapped standard skeleton equals universal") {
  const auto& coarse = testutil::tagger().coarse_map();
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sent = testutil::random_sentence(rng);
    const auto std_skel = skeleton_standard(sent);
    const auto uni_skel = skeleton_universal(sent);
    for (std::size_t i = 0; i < std_skel.size(); ++i) {
      CHECK(coarse.map(std_skel[i]) == uni_skel[i]);
    }
  }
}

TEST_CASE("tagging is deterministic") {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto tokens = testutil::random_tokens(rng);
    const auto once = testutil::tagger().tag(tokens);
    const auto twice = testutil::tagger().tag(tokens);
    CHECK(once == twice);
  }
}

TEST_CASE("display text uppercases the first letter only") {
  const auto sent = testutil::tagger().tag_text("the magic of witchcraft");
  CHECK(display_text(sent) == "The magic of witchcraft");
  const auto already = testutil::tagger().tag_text("Connecting people");
  CHECK(display_text(already) == "Connecting people");
}

TEST_CASE("coarse map loader rejects incomplete maps") {
  const auto path = testutil::write_temp_file("sloggen_partial_map.tsv",
                                              "NN\tNOUN\nVB\tVERB\n");
  CHECK_THROWS_AS(CoarseMap::load(path), DataError);
}

TEST_CASE("coarse map loader rejects unknown tags") {
  const auto path = testutil::write_temp_file("sloggen_bad_map.tsv",
                                              "NN\tNOUN\nZZ\tNOUN\n");
  CHECK_THROWS_AS(CoarseMap::load(path), DataError);
}

TEST_CASE("lexicon loader rejects malformed lines") {
  const auto no_tab =
      testutil::write_temp_file("sloggen_bad_lexicon1.tsv", "word NN\n");
  CHECK_THROWS_AS(Tagger::load(no_tab,
                               testutil::data_path("penn_to_universal.tsv")),
                  DataError);
  const auto bad_tag =
      testutil::write_temp_file("sloggen_bad_lexicon2.tsv", "word\tZZ\n");
  CHECK_THROWS_AS(Tagger::load(bad_tag,
                               testutil::data_path("penn_to_universal.tsv")),
                  DataError);
}

TEST_CASE("tag names round-trip") {
  for (std::size_t i = 0; i < kPennTagCount; ++i) {
    const auto tag = static_cast<PennTag>(i);
    CHECK(parse_penn_tag(to_string(tag)) == tag);
  }
  for (std::size_t i = 0; i < kUniversalTagCount; ++i) {
    const auto tag = static_cast<UniversalTag>(i);
    CHECK(parse_universal_tag(to_string(tag)) == tag);
  }
  CHECK(parse_universal_tag("PUNCT") == UniversalTag::Punct);
}
