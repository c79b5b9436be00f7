#include <catch2/catch_amalgamated.hpp>

#include <singrid/braid.hpp>

using namespace singrid;

namespace {

BraidWord w(const std::string& text) { return parse_braid(text); }

}  // namespace

TEST_CASE("parse_braid: header and letters") {
    BraidWord b = w("braid 3 s1 S2 t1 x2");
    CHECK(b.strands == 3);
    REQUIRE(b.letters.size() == 4);
    CHECK(b.letters[0] == sigma(1));
    CHECK(b.letters[1] == sigma_inv(2));
    CHECK(b.letters[2] == tau(1));
    CHECK(b.letters[3] == xi(2));
}

TEST_CASE("parse_braid: errors") {
    CHECK_THROWS_AS(parse_braid(""), BraidParseError);
    CHECK_THROWS_AS(parse_braid("grid 2"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("braid 0"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("braid 2 q1"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("braid 2 s"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("braid 2 s2"), BraidParseError);  // index out of range
    CHECK_THROWS_AS(parse_braid("braid 2 s0"), BraidParseError);
}

TEST_CASE("serialize_braid round trip") {
    for (const char* text : {"braid 1\n", "braid 2 x1\n", "braid 4 s1 S2 t3 x1 s3\n"}) {
        BraidWord b = w(text);
        CHECK(serialize_braid(b) == text);
        CHECK(parse_braid(serialize_braid(b)) == b);
    }
    CHECK(word_string(w("braid 2")) == "e");
    CHECK(word_string(w("braid 3 s1 x2")) == "s1 x2");
}

TEST_CASE("permutation: sigma and tau swap, xi does not") {
    CHECK(permutation(w("braid 2 s1")) == std::vector<int>{1, 0});
    CHECK(permutation(w("braid 2 S1")) == std::vector<int>{1, 0});
    CHECK(permutation(w("braid 2 t1")) == std::vector<int>{1, 0});
    CHECK(permutation(w("braid 2 x1")) == std::vector<int>{0, 1});
    CHECK(permutation(w("braid 3 s1 s2")) == std::vector<int>{2, 0, 1});
}

TEST_CASE("closure_components counts permutation cycles") {
    CHECK(closure_components(w("braid 3")) == 3);
    CHECK(closure_components(w("braid 2 s1")) == 1);
    CHECK(closure_components(w("braid 2 s1 s1")) == 2);
    // A tangency does not permute the strands, so the closure of x1 has two
    // components.
    CHECK(closure_components(w("braid 2 x1")) == 2);
    CHECK(closure_components(w("braid 2 x1 x1")) == 2);
    CHECK(closure_components(w("braid 2 t1")) == 1);
}

TEST_CASE("substitute_tau rewrites t as S x") {
    CHECK(substitute_tau(w("braid 3 t1 s2 t2")) == w("braid 3 S1 x1 s2 S2 x2"));
    BraidWord tau_free = w("braid 3 s1 x2 S1");
    CHECK(substitute_tau(tau_free) == tau_free);
}

TEST_CASE("substitute_tau preserves the word up to relations") {
    BraidWord b = w("braid 3 s1 t1 s2 t2 s1");
    RewriteOptions o;
    o.max_visited = 200000;
    CHECK(rewrite_equivalent(b, substitute_tau(b), o) == RewriteOutcome::equivalent);
}

TEST_CASE("resolve_braid: tangency letter") {
    BraidWord b = w("braid 2 x1");
    CHECK(resolve_braid(b, 0, +1) == w("braid 2 s1 s1"));
    CHECK(resolve_braid(b, 0, -1) == w("braid 2"));
    CHECK(resolve_braid(b, 0, 0) == w("braid 2 s1"));
}

TEST_CASE("resolve_braid: double-point letter") {
    BraidWord b = w("braid 3 s2 t1 s2");
    CHECK(resolve_braid(b, 1, +1) == w("braid 3 s2 s1 s2"));
    CHECK(resolve_braid(b, 1, -1) == w("braid 3 s2 S1 s2"));
    CHECK(resolve_braid(b, 1, 0) == w("braid 3 s2 s2"));
}

TEST_CASE("resolve_braid: rejects non-singular targets") {
    CHECK_THROWS_AS(resolve_braid(w("braid 2 s1"), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(resolve_braid(w("braid 2 x1"), 5, 0), std::out_of_range);
}

TEST_CASE("rewrite: free cancellation") {
    RewriteOptions o;
    o.max_visited = 50000;
    CHECK(rewrite_equivalent(w("braid 2 s1 S1"), w("braid 2"), o) == RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 2 S1 s1"), w("braid 2"), o) == RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 3 s1 s2 S2 S1"), w("braid 3"), o) ==
          RewriteOutcome::equivalent);
}

TEST_CASE("rewrite: distant letters commute") {
    RewriteOptions o;
    o.max_visited = 50000;
    CHECK(rewrite_equivalent(w("braid 4 s1 s3"), w("braid 4 s3 s1"), o) ==
          RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 4 x1 t3"), w("braid 4 t3 x1"), o) ==
          RewriteOutcome::equivalent);
}

TEST_CASE("rewrite: braid relation") {
    RewriteOptions o;
    o.max_visited = 100000;
    CHECK(rewrite_equivalent(w("braid 3 s1 s2 s1"), w("braid 3 s2 s1 s2"), o) ==
          RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 3 S1 S2 S1"), w("braid 3 S2 S1 S2"), o) ==
          RewriteOutcome::equivalent);
}

TEST_CASE("rewrite: mixed singular braid relations") {
    RewriteOptions o;
    o.max_visited = 100000;
    CHECK(rewrite_equivalent(w("braid 3 s1 s2 t1"), w("braid 3 t2 s1 s2"), o) ==
          RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 3 s1 s2 x1"), w("braid 3 x2 s1 s2"), o) ==
          RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 3 s2 s1 t2"), w("braid 3 t1 s2 s1"), o) ==
          RewriteOutcome::equivalent);
}

TEST_CASE("rewrite: sigma and tau at the same index commute; xi bridges") {
    RewriteOptions o;
    o.max_visited = 50000;
    CHECK(rewrite_equivalent(w("braid 2 s1 t1"), w("braid 2 t1 s1"), o) ==
          RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 2 x1"), w("braid 2 s1 t1"), o) ==
          RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 2 x1"), w("braid 2 t1 s1"), o) ==
          RewriteOutcome::equivalent);
    // xi commutes with its own sigma: x1 s1 = s1 x1 (via the bridge).
    CHECK(rewrite_equivalent(w("braid 2 x1 s1"), w("braid 2 s1 x1"), o) ==
          RewriteOutcome::equivalent);
}

TEST_CASE("rewrite: inequivalent words exhaust the budget") {
    RewriteOptions o;
    o.max_visited = 3000;
    CHECK(rewrite_equivalent(w("braid 2 s1"), w("braid 2 S1"), o) == RewriteOutcome::exhausted);
    CHECK(rewrite_equivalent(w("braid 2 s1 s1"), w("braid 2 s1"), o) == RewriteOutcome::exhausted);
    CHECK(rewrite_equivalent(w("braid 2 x1"), w("braid 2 t1"), o) == RewriteOutcome::exhausted);
}

TEST_CASE("rewrite: exponent sum and singular letter count are invariants") {
    // Sanity on the generator itself: every rewrite preserves the exponent sum
    // and the number of singular points, so equivalent words agree on both.
    BraidWord b1 = w("braid 3 s1 s2 t1 x2 S1");
    BraidWord b2 = w("braid 3 t2 s1 s2 x2 S1");
    RewriteOptions o;
    o.max_visited = 300000;
    REQUIRE(rewrite_equivalent(b1, b2, o) == RewriteOutcome::equivalent);
    CHECK(writhe_exponent(b1) == writhe_exponent(b2));
}

TEST_CASE("rewrite: conjugation identifies cyclic rotations") {
    RewriteOptions o;
    o.conjugation = true;
    o.max_visited = 50000;
    CHECK(rewrite_equivalent(w("braid 3 s1 s2"), w("braid 3 s2 s1"), o) ==
          RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 3 s1 x2 S1 t2"), w("braid 3 t2 s1 x2 S1"), o) ==
          RewriteOutcome::equivalent);
    RewriteOptions no_conj;
    no_conj.max_visited = 3000;
    CHECK(rewrite_equivalent(w("braid 3 s1 s2"), w("braid 3 s2 s1"), no_conj) ==
          RewriteOutcome::exhausted);
}

TEST_CASE("rewrite: exchange move flips the signs of a top-generator pair") {
    RewriteOptions o;
    o.exchange = true;
    o.max_visited = 100000;
    CHECK(rewrite_equivalent(w("braid 3 s1 s2 s1 S2"), w("braid 3 s1 S2 s1 s2"), o) ==
          RewriteOutcome::equivalent);
    RewriteOptions no_ex;
    no_ex.max_visited = 5000;
    CHECK(rewrite_equivalent(w("braid 3 s1 s2 s1 S2"), w("braid 3 s1 S2 s1 s2"), no_ex) ==
          RewriteOutcome::exhausted);
}

TEST_CASE("rewrite: stabilization relates words on different strand counts") {
    RewriteOptions o;
    o.stabilization = true;
    o.conjugation = true;
    o.max_visited = 200000;
    CHECK(rewrite_equivalent(w("braid 2 s1"), w("braid 3 s1 s2"), o) ==
          RewriteOutcome::equivalent);
    CHECK(rewrite_equivalent(w("braid 1"), w("braid 2 S1"), o) == RewriteOutcome::equivalent);
    RewriteOptions no_stab;
    no_stab.max_visited = 1000;
    CHECK(rewrite_equivalent(w("braid 2 s1"), w("braid 3 s1 s2"), no_stab) ==
          RewriteOutcome::exhausted);
}
