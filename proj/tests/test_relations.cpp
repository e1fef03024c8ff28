#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "daha/relations.hpp"

#include <set>

using namespace daha;

TEST_CASE("catalog structure") {
    auto& cat = relation_catalog();
    CHECK(cat.size() >= 30);
    std::set<std::string> ids;
    for (auto& e : cat) ids.insert(e.id);
    CHECK(ids.size() == cat.size()); // ids unique
    CHECK(ids.count("DAHA-Y2X1") == 1);
    CHECK(ids.count("CALD-COMM") == 1);
    CHECK(ids.count("YE-3") == 1);
}

TEST_CASE("unknown id is an error") {
    CHECK_THROWS_AS(verify("NO-SUCH-RELATION", 2, VerifyMode::Exact), Error);
}

TEST_CASE("single verifications from the contract") {
    auto r = verify("DAHA-HECKE", 2, VerifyMode::Exact);
    CHECK(r.verified());
    CHECK(r.instances == 1);

    auto g = verify("GRADE-YT", 3, VerifyMode::Exact);
    CHECK(g.verified());
    // the family contains X1 X2^2 X3^0, where Ytilde scales by q^3

    auto cd = verify("CALD-COMM", 3, VerifyMode::Exact);
    CHECK(cd.verified());
}

TEST_CASE("full suite at n = 2, exact") {
    for (auto& rep : verify_suite(2, VerifyMode::Exact)) {
        INFO(rep.id, " ",
             rep.failures.empty() ? "" : rep.failures[0].first);
        CHECK(rep.verified());
    }
}

TEST_CASE("spot checks at n = 3, exact (heaviest index cases)") {
    for (const char* id : {"YE-1", "YE-2", "YE-3", "DPROP-4", "TE-MOVE"}) {
        auto rep = verify(id, 3, VerifyMode::Exact);
        INFO(rep.id, " ",
             rep.failures.empty() ? "" : rep.failures[0].first);
        CHECK(rep.verified());
        CHECK(rep.instances > 0);
    }
}

TEST_CASE("specialized mode agrees with exact mode") {
    for (const char* id : {"DAHA-HECKE", "DAHA-TY", "QGL-d", "HECKE-R"}) {
        auto ex = verify(id, 3, VerifyMode::Exact);
        auto sp = verify(id, 3, VerifyMode::Specialized, 5);
        CHECK(ex.verified());
        CHECK(sp.verified());
        CHECK(ex.instances == sp.instances);
    }
}

TEST_CASE("vacuous ranges yield zero instances, verified") {
    auto rep = verify("YE-3", 2, VerifyMode::Exact); // needs n >= 3
    CHECK(rep.verified());
    CHECK(rep.instances == 0);
    auto qg5 = verify("QG-5", 3, VerifyMode::Exact); // needs |k-l| > 1
    CHECK(qg5.verified());
    CHECK(qg5.instances == 0);
}
