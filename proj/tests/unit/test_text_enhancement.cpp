#include "csfe/segmentation.hpp"
#include "csfe/text_enhancement.hpp"
#include "support.hpp"

using namespace csfe;

namespace {

struct Parsed {
  std::vector<Token> tokens;
  std::vector<Span> punct;
};

Parsed parse(std::string_view text) {
  const auto& b = *test::mini_bundle();
  auto seg = segment_words(segment_scripts(text), b);
  for (auto& t : seg.tokens) t.syllable_count = t.char_count;
  return {tag_pos(std::move(seg.tokens), b), std::move(seg.punct)};
}

std::vector<BoundaryAnnotation> predict(std::string_view text, int threshold = 7) {
  const auto p = parse(text);
  return predict_boundaries(p.tokens, p.punct, threshold);
}

std::vector<FrameDraft> drafts_for(std::span<const Token> tokens) {
  std::vector<FrameDraft> frames;
  for (const auto& t : tokens) {
    for (std::size_t u = 0; u < t.syllable_count; ++u) {
      FrameDraft f;
      f.symbol = t.surface + "/" + std::to_string(u);
      f.tone = 1;
      f.token_ordinal = t.ordinal;
      f.unit_in_word = u;
      frames.push_back(f);
    }
  }
  return frames;
}

using BK = BoundaryKind;

}  // namespace

TEST_CASE("Village sentence gets PW after each inner word and IPH at the end") {
  const auto got = predict("欢声笑语洒满村庄");
  CHECK(got == std::vector<BoundaryAnnotation>{{0, BK::PW}, {1, BK::PW}, {2, BK::PW}, {3, BK::IPH}});
}

TEST_CASE("single token gets only the final IPH") {
  CHECK(predict("我") == std::vector<BoundaryAnnotation>{{0, BK::IPH}});
}

TEST_CASE("full-width comma yields PPH at its gap") {
  CHECK(predict("你好，我") == std::vector<BoundaryAnnotation>{{0, BK::PPH}, {1, BK::IPH}});
}

TEST_CASE("sentence-final punctuation mid-line is IPH") {
  CHECK(predict("你好。我! ok") ==
        std::vector<BoundaryAnnotation>{{0, BK::IPH}, {1, BK::IPH}, {2, BK::IPH}});
}

TEST_CASE("accumulated syllables reaching the threshold force PPH and reset") {
  // Eight one-syllable tokens: after the 7th the count reaches 7.
  const auto got = predict("我爱是的很好我爱");
  REQUIRE(got.size() == 8);
  for (std::size_t i = 0; i < 6; ++i) CHECK(got[i].kind == BK::PW);
  CHECK(got[6] == BoundaryAnnotation{6, BK::PPH});
  CHECK(got[7] == BoundaryAnnotation{7, BK::IPH});

  const auto low = predict("我爱是的很好我爱", 3);
  CHECK(low[2].kind == BK::PPH);
  CHECK(low[5].kind == BK::PPH);
  CHECK(low[3].kind == BK::PW);
}

TEST_CASE("threshold below 2 is rejected") {
  CHECK_THROWS_AS(RuleBoundaryPredictor(1), std::invalid_argument);
}

TEST_CASE("one annotation per gap and IPH at the end of every sentence") {
  for (std::string text : {"欢声笑语洒满村庄", "我爱你好。hello world, 我爱银行！", "I love wifi ok"}) {
    CAPTURE(text);
    const auto p = parse(text);
    const auto got = predict_boundaries(p.tokens, p.punct);
    REQUIRE(got.size() == p.tokens.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].position == i);
      const bool sentence_end = i + 1 == p.tokens.size() || p.tokens[i + 1].sentence_index != p.tokens[i].sentence_index;
      if (sentence_end) CHECK(got[i].kind == BK::IPH);
    }
  }
}

TEST_CASE("adding a comma only upgrades boundaries") {
  const auto without = predict("我爱你好银行");
  const auto with = predict("我爱，你好银行");
  REQUIRE(without.size() == with.size());
  for (std::size_t i = 0; i < with.size(); ++i) CHECK(with[i].kind >= without[i].kind);
}

TEST_CASE("empty annotations leave frames unchanged") {
  const auto p = parse("欢声笑语洒");
  const auto frames = drafts_for(p.tokens);
  CHECK(insert_boundary_frames(frames, {}) == frames);
}

TEST_CASE("N frames and K annotations give N+K frames") {
  const auto p = parse("欢声笑语洒满村庄");
  auto frames = drafts_for(p.tokens);
  for (auto& f : frames) f.context.word_len = static_cast<std::uint16_t>(f.token_ordinal + 1);
  const auto ann = predict_boundaries(p.tokens, p.punct);
  const auto out = insert_boundary_frames(frames, ann);
  REQUIRE(out.size() == frames.size() + ann.size());
  // Boundary frame follows the last unit of 欢声笑语 and copies its context.
  CHECK(out[4].symbol == "#PW");
  CHECK(out[4].boundary == BK::PW);
  CHECK(out[4].tone == 0);
  CHECK(out[4].tone_desc.contour == std::array<std::uint8_t, 3>{0, 0, 0});
  CHECK(out[4].context == out[3].context);
  CHECK(out.back().symbol == "#IPH");
  std::size_t plain = 0;
  for (const auto& f : out) {
    if (f.boundary == BK::None) CHECK(f == frames[plain++]);
  }
  CHECK(plain == frames.size());
}

TEST_CASE("annotation past the last token is out of range") {
  const auto p = parse("你好");
  const std::vector<BoundaryAnnotation> bad{{5, BK::PW}};
  CHECK(test::capture_error([&] { insert_boundary_frames(drafts_for(p.tokens), bad); }).code() ==
        ErrorCode::AnnotationOutOfRange);
}

TEST_CASE("strongest annotation wins at a shared gap") {
  const auto p = parse("你好我");
  const std::vector<BoundaryAnnotation> ann{{0, BK::PW}, {0, BK::PPH}};
  const auto out = insert_boundary_frames(drafts_for(p.tokens), ann);
  REQUIRE(out.size() == 4);
  CHECK(out[2].boundary == BK::PPH);
}

TEST_CASE("word context for a 4-character word") {
  const auto p = parse("欢声笑语洒");
  const auto frames = drafts_for(p.tokens);
  const auto ctx = word_context(p.tokens, frames);
  REQUIRE(ctx.size() == 5);
  for (std::uint16_t i = 0; i < 4; ++i) {
    CHECK(ctx[i].word_len == 4);
    CHECK(ctx[i].char_pos_in_word == i);
    CHECK(ctx[i].pos_id == static_cast<std::uint16_t>(PosTag::N) + 1);
  }
  CHECK(ctx[4].word_len == 1);
  CHECK(ctx[4].char_pos_in_word == 0);
}

TEST_CASE("long words clip word_len to 8 and char position to 7") {
  Token t;
  t.surface = "x";
  t.char_count = 12;
  t.syllable_count = 12;
  const std::vector<Token> tokens{t};
  const auto ctx = word_context(tokens, drafts_for(tokens));
  CHECK(ctx[0].word_len == 8);
  CHECK(ctx[11].char_pos_in_word == 7);
  for (const auto& c : ctx) CHECK(c.char_pos_in_word <= 7);
}

TEST_CASE("sentence context counts units from sentence start") {
  const auto p = parse("欢声笑语洒满村庄");
  const auto frames = drafts_for(p.tokens);
  const auto ctx = sentence_context(p.tokens, frames);
  CHECK(ctx.front().char_pos_in_sentence == 0);
  CHECK(ctx.front().word_pos_in_sentence == 0);
  CHECK(ctx.back().char_pos_in_sentence == 7);
  CHECK(ctx.back().word_pos_in_sentence == 3);
}

TEST_CASE("sentence counters reset after IPH punctuation") {
  const auto p = parse("你好。我爱");
  const auto ctx = sentence_context(p.tokens, drafts_for(p.tokens));
  REQUIRE(ctx.size() == 4);
  CHECK(ctx[2].char_pos_in_sentence == 0);
  CHECK(ctx[3].char_pos_in_sentence == 1);
  CHECK(ctx[3].word_pos_in_sentence == 1);
}

TEST_CASE("200-unit sentence clips char position at 127") {
  Token t;
  t.char_count = 200;
  t.syllable_count = 200;
  const std::vector<Token> tokens{t};
  const auto ctx = sentence_context(tokens, drafts_for(tokens));
  CHECK(ctx[126].char_pos_in_sentence == 126);
  CHECK(ctx[127].char_pos_in_sentence == 127);
  CHECK(ctx[199].char_pos_in_sentence == 127);
}

TEST_CASE("prepending k units shifts sentence positions by k") {
  const auto base = parse("村庄");
  const auto shifted = parse("我爱你好村庄");
  const auto a = sentence_context(base.tokens, drafts_for(base.tokens));
  const auto b = sentence_context(shifted.tokens, drafts_for(shifted.tokens));
  const std::size_t k = b.size() - a.size();
  CHECK(k == 4);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i + k].char_pos_in_sentence == a[i].char_pos_in_sentence + k);
}

TEST_CASE("boundary frames do not advance char_pos_in_sentence") {
  const auto p = parse("欢声笑语洒");
  auto frames = insert_boundary_frames(drafts_for(p.tokens), predict_boundaries(p.tokens, p.punct));
  const auto ctx = sentence_context(p.tokens, frames);
  REQUIRE(frames.size() == 7);
  CHECK(ctx[4].char_pos_in_sentence == 3);  // #PW copies 语
  CHECK(ctx[5].char_pos_in_sentence == 4);  // 洒
}

TEST_CASE("clip") {
  CHECK(clip(0, 1, 8) == 1);
  CHECK(clip(12, 1, 8) == 8);
  CHECK(clip(5, 0, 127) == 5);
}
