#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "ppmx/context_model.hpp"

using namespace ppmx;

namespace {

std::vector<std::uint16_t> path_of(const std::string& s) {
    return {s.begin(), s.end()};
}

const int all_depths[] = {0, 1, 2, 3, 4, 5, 6, 7, 8};

} // namespace

TEST_CASE("fresh trie holds only the root") {
    context_trie t(trie_mode::classic, 4);
    CHECK(t.node_count() == 1);
    CHECK(t.descend({}).value() == context_trie::root_id);
    CHECK(!t.descend(path_of("a")).has_value());
}

TEST_CASE("single-label path over a one-symbol alphabet yields two nodes") {
    context_trie t(trie_mode::classic, 1);
    t.update_path(path_of("a"), 'a', std::span<const int>(all_depths, 2));
    CHECK(t.node_count() == 2);
    const auto id = t.descend(path_of("a"));
    REQUIRE(id.has_value());
    CHECK(t.node(*id).count_of('a') == 1);
    CHECK(t.node(context_trie::root_id).count_of('a') == 1);
}

TEST_CASE("repeated path insertion does not grow the trie") {
    context_trie t(trie_mode::classic, 2);
    t.update_path(path_of("ab"), 'x', std::span<const int>(all_depths, 3));
    const auto before = t.node_count();
    t.update_path(path_of("ab"), 'x', std::span<const int>(all_depths, 3));
    CHECK(t.node_count() == before);
    const auto id = t.descend(path_of("ab"));
    REQUIRE(id.has_value());
    CHECK(t.node(*id).count_of('x') == 2);
}

TEST_CASE("increments land only on the listed depths") {
    context_trie t(trie_mode::classic, 3);
    const int depths[] = {3, 1};
    t.update_path(path_of("abc"), 'z', depths);
    CHECK(t.node_count() == 4); // root + 3 path nodes, all created
    CHECK(t.node(*t.descend(path_of("abc"))).count_of('z') == 1);
    CHECK(t.node(*t.descend(path_of("ab"))).count_of('z') == 0);
    CHECK(t.node(*t.descend(path_of("a"))).count_of('z') == 1);
    CHECK(t.node(context_trie::root_id).count_of('z') == 0);
}

TEST_CASE("collect_ancestors marks missing suffixes") {
    context_trie t(trie_mode::classic, 3);
    t.update_path(path_of("ab"), 'q', std::span<const int>(all_depths, 3));
    std::vector<std::uint32_t> anc;
    t.collect_ancestors(path_of("abc"), anc);
    REQUIRE(anc.size() == 4);
    CHECK(anc[0] == context_trie::root_id);
    CHECK(anc[1] == *t.descend(path_of("a")));
    CHECK(anc[2] == *t.descend(path_of("ab")));
    CHECK(anc[3] == context_trie::no_node);

    t.collect_ancestors(path_of("xy"), anc);
    REQUIRE(anc.size() == 3);
    CHECK(anc[1] == context_trie::no_node);
    CHECK(anc[2] == context_trie::no_node);
}

TEST_CASE("order-1 style usage counts distinct context bytes plus root") {
    const std::string text = "abracadabra";
    context_trie t(trie_mode::classic, 1);
    for (std::size_t i = 1; i < text.size(); ++i) {
        const std::uint16_t prev[] = {static_cast<std::uint16_t>(text[i - 1])};
        t.update_path(prev, static_cast<std::uint8_t>(text[i]),
                      std::span<const int>(all_depths, 2));
    }
    std::set<char> distinct(text.begin(), text.end() - 1);
    CHECK(t.node_count() == distinct.size() + 1);
}

TEST_CASE("escape distribution for small hand-checked nodes") {
    context_trie t(trie_mode::classic, 1);
    exclusion_set none;

    SUBCASE("{a:1}, no exclusions") {
        t.update_path(path_of("x"), 'a', std::span<const int>(all_depths, 2));
        const auto nd = build_distribution(&t.node(*t.descend(path_of("x"))), none);
        REQUIRE(nd.slot_symbol == std::vector<std::uint8_t>{'a'});
        CHECK(nd.dist.freq == std::vector<std::uint32_t>{1, 1}); // 2*1-1, escape d=1
        CHECK(nd.dist.total == 2);
        CHECK(nd.escape_slot() == 1);
    }

    SUBCASE("{a:3, b:1} with b excluded") {
        const int d1[] = {1};
        for (int i = 0; i < 3; ++i)
            t.update_path(path_of("x"), 'a', d1);
        t.update_path(path_of("x"), 'b', d1);
        exclusion_set excl;
        excl.add('b');
        const auto nd = build_distribution(&t.node(*t.descend(path_of("x"))), excl);
        REQUIRE(nd.slot_symbol == std::vector<std::uint8_t>{'a'});
        CHECK(nd.dist.freq == std::vector<std::uint32_t>{5, 1});
    }

    SUBCASE("absent context is escape-only") {
        const auto nd = build_distribution(nullptr, none);
        CHECK(nd.slot_symbol.empty());
        CHECK(nd.dist.freq == std::vector<std::uint32_t>{1});
        CHECK(nd.escape_slot() == 0);
    }

    SUBCASE("all symbols excluded is escape-only") {
        const int d1[] = {1};
        t.update_path(path_of("x"), 'a', d1);
        exclusion_set excl;
        excl.add('a');
        const auto nd = build_distribution(&t.node(*t.descend(path_of("x"))), excl);
        CHECK(nd.dist.freq == std::vector<std::uint32_t>{1});
    }
}

TEST_CASE("distribution matches a direct oracle over random nodes") {
    std::mt19937 rng(314);
    for (int trial = 0; trial < 1000; ++trial) {
        context_trie t(trie_mode::classic, 1);
        std::map<std::uint8_t, std::uint32_t> shadow;
        const int updates = 1 + static_cast<int>(rng() % 50);
        const int d1[] = {1};
        for (int i = 0; i < updates; ++i) {
            const auto s = static_cast<std::uint8_t>(rng() % 24);
            t.update_path(path_of("x"), s, d1);
            shadow[s]++;
        }
        exclusion_set excl;
        for (int i = 0; i < 4; ++i)
            excl.add(static_cast<std::uint8_t>(rng() % 24));

        const auto nd = build_distribution(&t.node(*t.descend(path_of("x"))), excl);

        std::vector<std::uint8_t> want_slots;
        std::vector<std::uint32_t> want_freqs;
        for (const auto& [s, c] : shadow) {
            if (excl.contains(s))
                continue;
            want_slots.push_back(s);
            want_freqs.push_back(2 * c - 1);
        }
        want_freqs.push_back(want_slots.empty()
                                 ? 1
                                 : static_cast<std::uint32_t>(want_slots.size()));
        CHECK(nd.slot_symbol == want_slots);
        CHECK(nd.dist.freq == want_freqs);
    }
}

TEST_CASE("counts halve in place at the cap") {
    context_trie t(trie_mode::classic, 1);
    const int d1[] = {1};
    t.update_path(path_of("x"), 'a', d1);
    for (std::uint32_t i = 0; i < context_trie::count_limit; ++i)
        t.update_path(path_of("x"), 'b', d1);
    const auto& n = t.node(*t.descend(path_of("x")));
    CHECK(n.count_of('b') == context_trie::count_limit / 2);
    CHECK(n.count_of('a') == 1); // (1+1)/2, nothing drops to zero
}

TEST_CASE("ccm-mode trie stays binary") {
    context_trie t(trie_mode::ccm, 8);
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        std::vector<std::uint16_t> path(1 + rng() % 8);
        for (auto& b : path)
            b = rng() % 2;
        const int depth = static_cast<int>(path.size());
        t.update_path(path, static_cast<std::uint8_t>(rng() % 256), {&depth, 1});
    }
    for (std::uint32_t id = 0; id < t.node_count(); ++id)
        CHECK(t.node(id).children.size() <= 2);
}

TEST_CASE("normalized node count follows the scaling formula") {
    CHECK(normalized_node_count(10612, 82) == doctest::Approx(10612.0 * 84 / 164));
    CHECK(normalized_node_count(10612, 82) == doctest::Approx(5434.0).epsilon(0.0005));
    CHECK(normalized_node_count(0, 82) == 0.0);
    CHECK(normalized_node_count(100, 2) == doctest::Approx(100.0)); // factor 1.0
    CHECK_THROWS_AS(normalized_node_count(5, 0), error);
}
