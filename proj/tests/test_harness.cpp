#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sumset/error.hpp"
#include "sumset/harness.hpp"

using namespace sumset;

TEST_CASE("enumerate_sets counts") {
    CHECK(enumerate_sets(4).size() == 6);
    CHECK(enumerate_sets(2).size() == 1);
    CHECK(enumerate_sets(2).front() == FiniteIntegerSet({0, 1, 2}));
    CHECK(enumerate_sets(5, 3).size() == 4);
    // b = 7 is prime, so only {0,7} is dropped.
    CHECK(enumerate_sets(7).size() == 63);
    CHECK_THROWS_AS(enumerate_sets(1), InvalidArgument);
}

TEST_CASE("set_from_mask") {
    CHECK(set_from_mask(6, 0b10001) == FiniteIntegerSet({0, 1, 5, 6}));
    CHECK_FALSE(set_from_mask(6, 0b01010).has_value());
    CHECK_FALSE(set_from_mask(6, 0).has_value());
}

TEST_CASE("partition_work covers every mask once") {
    const auto units = partition_work(12, 100);
    std::uint64_t covered = 0;
    std::uint64_t expected_begin = 0;
    for (const auto& u : units) {
        CHECK(u.b == 12);
        CHECK(u.mask_begin == expected_begin);
        CHECK(u.mask_end > u.mask_begin);
        covered += u.mask_end - u.mask_begin;
        expected_begin = u.mask_end;
    }
    CHECK(covered == (std::uint64_t{1} << 11));
    CHECK(units.size() == 21);
}

TEST_CASE("config validation") {
    ScanConfig c;
    c.b_min = 1;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c.b_min = 5;
    c.b_max = 4;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c.b_max = 6;
    c.delta = 3;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("delta 0 scan finds nothing for b <= 10") {
    ScanConfig c;
    c.b_min = 2;
    c.b_max = 10;
    const auto r = scan_theorems(c);
    CHECK(r.failures.empty());
    CHECK(r.consistent());
    CHECK(r.sets_scanned > 0);
    CHECK_NOTHROW(require_consistent(r));
}

TEST_CASE("delta 1 scan lists only catalogued sets and is consistent") {
    ScanConfig c;
    c.b_min = 4;
    c.b_max = 10;
    c.delta = 1;
    c.parallelism = 3;
    const auto r = scan_theorems(c);
    CHECK(r.consistent());
    CHECK_FALSE(r.failures.empty());
    for (const auto& f : r.failures) {
        CHECK_FALSE(f.labels.empty());
        CHECK(f.N >= std::max<Integer>(1, f.b - f.set.ell() - 1));
        CHECK_FALSE(check_structure(f.set, f.N).holds);
    }
    bool found = false;
    for (const auto& f : r.failures)
        if (f.set == FiniteIntegerSet({0, 1, 5, 6})) {
            found = true;
            CHECK(f.N == 3);
            CHECK(f.witnesses.front() == 4);
        }
    CHECK(found);
}

TEST_CASE("scan results do not depend on parallelism") {
    ScanConfig c;
    c.b_min = 4;
    c.b_max = 11;
    c.delta = 1;
    c.parallelism = 1;
    const auto serial = render_json(scan_theorems(c));
    c.parallelism = 8;
    CHECK(render_json(scan_theorems(c)) == serial);
}

TEST_CASE("ell filters") {
    ScanConfig c;
    c.b_min = 6;
    c.b_max = 8;
    c.ell_min = 2;
    c.ell_max = 3;
    const auto r = scan_theorems(c);
    std::uint64_t expected = 0;
    for (Integer b = 6; b <= 8; ++b) expected += enumerate_sets(b, 2).size() + enumerate_sets(b, 3).size();
    CHECK(r.sets_scanned == expected);
    CHECK(r.skipped_filter > 0);
}

TEST_CASE("require_consistent carries the witness set") {
    ScanResult r;
    r.catalog_mismatches.push_back({6, 0, FiniteIntegerSet({0, 1, 5, 6}), true, {}, "test"});
    CHECK_FALSE(r.consistent());
    try {
        require_consistent(r);
        FAIL("expected CatalogMismatch");
    } catch (const CatalogMismatch& e) {
        CHECK(e.witness_set() == std::vector<Integer>{0, 1, 5, 6});
    }
}

TEST_CASE("json report") {
    ScanResult empty;
    empty.config.b_min = 2;
    empty.config.b_max = 2;
    const auto j = nlohmann::json::parse(render_json(empty));
    CHECK(j.at("sets_scanned") == 0);
    CHECK(j.at("failures").empty());
    CHECK(j.at("catalog_mismatches").empty());
    CHECK(j.at("timing").empty());

    ScanConfig c;
    c.b_min = 6;
    c.b_max = 6;
    c.delta = 1;
    const auto r = scan_theorems(c);
    const auto k = nlohmann::json::parse(render_json(r));
    CHECK(k.at("failures").size() == r.failures.size());
    CHECK(k.at("config").at("delta") == 1);
}

TEST_CASE("csv report") {
    ScanResult r;
    r.failures.push_back({6, 0b10001, FiniteIntegerSet({0, 1, 5, 6}), 3, {4, 9, 14}, 3, 4, {}});
    std::istringstream lines(render_csv(r));
    std::string header;
    std::string row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "b,set,N,first_witness,labels");
    CHECK(row == "6,{0,1,5,6},3,4,none");
}

TEST_CASE("emit_report") {
    ScanResult r;
    CHECK_THROWS_AS(emit_report(r, ReportFormat::Json, "/nonexistent-dir/sub/report.json"), IoError);

    const auto path = std::filesystem::temp_directory_path() / "sumset_emit_report_test.csv";
    emit_report(r, ReportFormat::Csv, path.string());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "b,set,N,first_witness,labels");
    std::filesystem::remove(path);
}
