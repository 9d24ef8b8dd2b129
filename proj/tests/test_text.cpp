#include <doctest.h>

#include <string>
#include <vector>

#include "caudit/text/textproc.hpp"
#include "caudit/util/rng.hpp"

using namespace caudit;
using text::TokenKind;
using text::TokenSpan;

namespace {

std::vector<std::string> token_texts(const std::string& s) {
    std::vector<std::string> out;
    for (const TokenSpan& t : text::tokenize(s))
        out.emplace_back(t.view(s));
    return out;
}

}  // namespace

TEST_CASE("tokenize basics") {
    CHECK(text::tokenize("").empty());
    CHECK(token_texts("Hello world.") == std::vector<std::string>{"Hello", "world", "."});
    CHECK(token_texts("don't stop") == std::vector<std::string>{"do", "n't", "stop"});
    CHECK(token_texts("the cat's toy") == std::vector<std::string>{"the", "cat", "'s", "toy"});
    CHECK(token_texts("well-known fact") == std::vector<std::string>{"well-known", "fact"});
    CHECK(token_texts("\"Hi!\"") == std::vector<std::string>{"\"", "Hi", "!", "\""});
}

TEST_CASE("tokenize kinds") {
    auto toks = text::tokenize("I have 42 cats.");
    REQUIRE(toks.size() == 5);
    CHECK(toks[0].kind == TokenKind::Word);
    CHECK(toks[2].kind == TokenKind::Number);
    CHECK(toks[4].kind == TokenKind::Punct);
    CHECK(text::count_word_tokens("I have 42 cats.") == 3);
}

TEST_CASE("tokenize spans reconstruct the input") {
    const std::string inputs[] = {
        "Hello world.",
        "don't  stop\tnow",
        "a b",                    // non-breaking space
        "Café — croissants…",  // accents, em dash, ellipsis
        "\"quoted,\" she said.",
    };
    for (const std::string& s : inputs) {
        auto toks = text::tokenize(s);
        std::size_t pos = 0;
        std::string rebuilt;
        for (const TokenSpan& t : toks) {
            CHECK(t.begin >= pos);
            rebuilt.append(s, pos, t.begin - pos);  // inter-token gap
            rebuilt.append(s, t.begin, t.end - t.begin);
            pos = t.end;
            CHECK(t.begin < t.end);
        }
        rebuilt.append(s, pos, s.size() - pos);
        CHECK(rebuilt == s);
    }
}

TEST_CASE("word token counts are line additive") {
    std::string doc = "First line here.\nSecond line, with more.\nlast one";
    std::size_t whole = text::count_word_tokens(doc);
    std::size_t parts = text::count_word_tokens("First line here.") +
                        text::count_word_tokens("Second line, with more.") +
                        text::count_word_tokens("last one");
    CHECK(whole == parts);
}

TEST_CASE("sentence splitting") {
    CHECK(text::split_sentences("A cat. A dog.").size() == 2);
    CHECK(text::split_sentences("Mr. Smith left. He ran.").size() == 2);
    CHECK(text::split_sentences("no terminal punct").size() == 1);
    CHECK(text::split_sentences("").empty());
    CHECK(text::split_sentences("What?! Really? Yes.").size() == 3);
    CHECK(text::split_sentences("He lives in the U.S. now").size() == 1);

    std::string s = "  One here.  Two there!  ";
    auto spans = text::split_sentences(s);
    REQUIRE(spans.size() == 2);
    CHECK(spans[0].view(s) == "One here.");
    CHECK(spans[1].view(s) == "Two there!");
}

TEST_CASE("sentences cover all non-whitespace characters") {
    std::string s = "First one. Second, e.g. this! Third…  tail bit";
    auto spans = text::split_sentences(s);
    std::size_t covered = 0;
    std::size_t prev_end = 0;
    for (auto& sp : spans) {
        CHECK(sp.begin >= prev_end);
        for (std::size_t i = prev_end; i < sp.begin; ++i)
            CHECK(std::isspace(static_cast<unsigned char>(s[i])));
        covered += sp.end - sp.begin;
        prev_end = sp.end;
    }
    CHECK(covered > 0);
}

TEST_CASE("sentence count stable under join-with-space") {
    util::Rng rng(7);
    const std::vector<std::string> words = {"alpha", "beta", "Mr.", "gamma", "delta",
                                            "U.S.", "epsilon", "zeta"};
    const std::vector<std::string> terminals = {".", "!", "?"};
    for (int round = 0; round < 200; ++round) {
        std::string doc;
        int sentences = 1 + static_cast<int>(rng.next_below(5));
        for (int s = 0; s < sentences; ++s) {
            int n = 2 + static_cast<int>(rng.next_below(5));
            for (int w = 0; w < n; ++w) {
                if (!doc.empty())
                    doc += ' ';
                doc += words[rng.next_below(words.size())];
            }
            doc += terminals[rng.next_below(terminals.size())];
        }
        auto first = text::split_sentences(doc);
        std::string rejoined;
        for (auto& sp : first) {
            if (!rejoined.empty())
                rejoined += ' ';
            rejoined += std::string(sp.view(doc));
        }
        auto second = text::split_sentences(rejoined);
        CHECK(first.size() == second.size());
    }
}

TEST_CASE("paragraph splitting") {
    CHECK(text::split_paragraphs("a\n\nb") == std::vector<std::string>{"a", "b"});
    CHECK(text::split_paragraphs("a\nb") == std::vector<std::string>{"a\nb"});
    CHECK(text::split_paragraphs("a\n\n\n\nb") == std::vector<std::string>{"a", "b"});
    CHECK(text::split_paragraphs("").empty());
    CHECK(text::split_paragraphs("\n\n\n").empty());
    CHECK(text::split_paragraphs("one\ntwo\n\nthree") ==
          std::vector<std::string>{"one\ntwo", "three"});
}

TEST_CASE("normalize_for_matching") {
    CHECK(text::normalize_for_matching("The CAT, sat!") == "the cat sat");
    CHECK(text::normalize_for_matching("") == "");
    CHECK(text::normalize_for_matching("  spaced\t\nout  ") == "spaced out");
    CHECK(text::normalize_for_matching("Naïve résumé") == "naïve résumé");
    // compatibility forms fold: fullwidth letters, ligature fi
    CHECK(text::normalize_for_matching("ＨＥＬＬＯ") == "hello");
    CHECK(text::normalize_for_matching("oﬀice") == "office");
    CHECK(text::normalize_for_matching("ﬁsh") == "fish");
}

TEST_CASE("normalize is idempotent and case/punct invariant") {
    util::Rng rng(99);
    const std::string pieces[] = {"Hello", "WORLD", "don't", "café", "42", "--",
                                  "...",   "(x)",   "A.B",   "Über", "—"};
    for (int round = 0; round < 500; ++round) {
        std::string s;
        int n = static_cast<int>(rng.next_below(8));
        for (int i = 0; i < n; ++i) {
            s += pieces[rng.next_below(std::size(pieces))];
            if (rng.next_below(2))
                s += ' ';
        }
        std::string once = text::normalize_for_matching(s);
        CHECK(text::normalize_for_matching(once) == once);

        // sprinkle punctuation and flip some ASCII case; result must not move
        std::string perturbed;
        for (char c : s) {
            bool ascii = (static_cast<unsigned char>(c) & 0x80) == 0;
            if (ascii && rng.next_below(6) == 0)
                perturbed += ',';
            if (ascii && c >= 'a' && c <= 'z' && rng.next_below(2))
                perturbed += static_cast<char>(c - 32);
            else
                perturbed += c;
        }
        CHECK(text::normalize_for_matching(perturbed) == once);
    }
}
