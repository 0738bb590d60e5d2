#include <qmock/verify.hpp>

#include "mutation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace qmock;

TEST_CASE("registry contents") {
    Registry reg = Registry::standard();
    CHECK(reg.identities().size() >= 34);

    auto listing = list_identities(reg);
    CHECK(listing.size() == reg.identities().size());

    CHECK(reg.contains("thm3.1a"));
    CHECK(reg.find("thm3.1a").anchor.find("g3_1(w;q) = g3_2(w;q)") != std::string::npos);
    CHECK(reg.contains("rogers-1.1"));
    CHECK(reg.find("rogers-1.1").anchor.find("psi(q)") != std::string::npos);

    // ids unique, anchors nonempty
    std::set<std::string> ids;
    for (const auto& i : reg.identities()) {
        CHECK(ids.insert(i.id).second);
        CHECK(!i.anchor.empty());
    }

    // exactly the two parameterized identities run in sampled mode
    for (const auto& i : reg.identities()) {
        bool sampled = (i.id == "rogers-fine-2.2" || i.id == "andrews-2.6");
        CHECK((i.mode == VerifyMode::sampled) == sampled);
        CHECK(i.extra_params.empty() == !sampled);
    }
}

TEST_CASE("every catalog entry is exercised by some identity") {
    Catalog cat = Catalog::standard();
    Registry reg = Registry::standard();
    for (const auto& name : cat.names()) {
        INFO(name);
        CHECK(!qmock_test::dependents_of(reg, name).empty());
    }
    // and every declared dependency exists in the catalog
    for (const auto& i : reg.identities())
        for (const auto& dep : i.deps)
            CHECK(cat.contains(dep));
}

TEST_CASE("single identity verification") {
    Catalog cat = Catalog::standard();
    Registry reg = Registry::standard();

    Report r = verify_identity(cat, reg, "fstar-inv", 20, 5, 42);
    CHECK(r.status == "pass");
    CHECK(!r.mismatch.has_value());
    CHECK(r.order == 20);
    CHECK(r.mode == "symbolic-w");

    Report r2 = verify_identity(cat, reg, "f-inv", 20, 5, 42);
    CHECK(r2.status == "pass");

    Report r3 = verify_identity(cat, reg, "mtc-phi-f", 20, 5, 42);
    CHECK(r3.status == "pass");

    CHECK_THROWS_AS(verify_identity(cat, reg, "nosuch", 8, 1, 42), UnknownName);
}

TEST_CASE("sampled verification is deterministic in the seed") {
    Catalog cat = Catalog::standard();
    Registry reg = Registry::standard();

    Report a = verify_identity(cat, reg, "rogers-fine-2.2", 10, 4, 42);
    Report b = verify_identity(cat, reg, "rogers-fine-2.2", 10, 4, 42);
    CHECK(a.status == "pass");
    CHECK(a.samples.size() == 4);
    REQUIRE(a.samples.size() == b.samples.size());
    for (size_t i = 0; i < a.samples.size(); ++i)
        CHECK(a.samples[i] == b.samples[i]);

    Report c = verify_identity(cat, reg, "rogers-fine-2.2", 10, 4, 43);
    CHECK(c.status == "pass");
    bool all_equal = true;
    for (size_t i = 0; i < a.samples.size(); ++i)
        all_equal = all_equal && a.samples[i] == c.samples[i];
    CHECK(!all_equal); // a different seed draws different parameters

    // sample values come from the declared pool and respect exclusions
    const auto& pool = sample_pool();
    Report d = verify_identity(cat, reg, "andrews-2.6", 10, 5, 42);
    CHECK(d.status == "pass");
    for (const auto& sample : d.samples) {
        CHECK(!(sample.at("B") + sample.at("a")).is_zero());
        for (const auto& [key, value] : sample)
            CHECK(std::find(pool.begin(), pool.end(), value) != pool.end());
    }
}

TEST_CASE("verify_all covers the registry deterministically") {
    Catalog cat = Catalog::standard();
    Registry reg = Registry::standard();

    auto reports = verify_all(cat, reg, 10, 2, 42);
    CHECK(reports.size() == reg.identities().size());
    for (const auto& r : reports) {
        INFO(r.id << ": " << r.error);
        CHECK(r.status == "pass");
    }

    auto again = verify_all(cat, reg, 10, 2, 42);
    for (size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].id == again[i].id);
        CHECK(reports[i].status == again[i].status);
        CHECK(reports[i].samples == again[i].samples);
    }

    // empty registry guard
    Registry empty;
    CHECK(verify_all(cat, empty, 10, 2, 42).empty());
}

TEST_CASE("a flipped sign in psi4 breaks exactly the identities that read it") {
    Catalog cat = Catalog::standard();
    Registry reg = Registry::standard();

    auto& t = cat.at_mutable("psi4").components[0].terms[0];
    t.const_factor = -t.const_factor;

    std::set<std::string> failing;
    for (const auto& r : verify_all(cat, reg, 12, 2, 42))
        if (r.status != "pass")
            failing.insert(r.id);
    CHECK(failing == std::set<std::string>{"psi4-rel", "thm4.2a"});

    // the mismatch is reported at the smallest affected power: psi4 enters
    // psi4-rel at the w^1 q^1 term
    Report r = verify_identity(cat, reg, "psi4-rel", 12, 2, 42);
    REQUIRE(r.mismatch.has_value());
    CHECK(r.mismatch->q_power == 1);
}

TEST_CASE("sign flips anywhere in the catalog are detected") {
    Catalog base = Catalog::standard();
    Registry reg = Registry::standard();
    auto sites = qmock_test::sign_flip_sites(base);
    CHECK(sites.size() > 60);

    // spot-check one site per entry here; the acceptance suite sweeps all
    std::set<std::string> seen;
    for (const auto& site : sites) {
        if (!seen.insert(site.entry).second)
            continue;
        Catalog mutated = Catalog::standard();
        site.apply(mutated);
        bool detected = false;
        for (const auto& id : qmock_test::dependents_of(reg, site.entry)) {
            Report r = verify_identity(mutated, reg, id, 12, 2, 42);
            if (r.status != "pass") {
                detected = true;
                if (r.status == "fail")
                    CHECK(r.mismatch.has_value());
                break;
            }
        }
        INFO(site.description);
        CHECK(detected);
    }
    CHECK(seen.size() == base.names().size());
}
