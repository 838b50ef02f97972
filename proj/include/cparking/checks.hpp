/**
 * @file checks.hpp
 * @brief Batch verification harness: named machine checks over the
 *        enumeration, bijection, operator and Macdonald layers, with
 *        deterministic reports.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cparking/ehaops.hpp"

namespace cparking {

struct UnknownCheck : std::domain_error {
    explicit UnknownCheck(const std::string& name) : std::domain_error("UnknownCheck: " + name) {}
};
struct BudgetTooSmall : std::domain_error {
    BudgetTooSmall() : std::domain_error("BudgetTooSmall: guard band leaves no degrees") {}
};

struct CheckParams {
    int m = 0, n = 0, k = 0;  // 0 = the check's default grid
    std::optional<Composition> alpha;
    std::optional<Partition> lambda;
    int area_budget = -1;  // -1 = auto
    int labels = -1;       // -1 = auto
    int guard = 1;
};

struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::string verdict;  // pass / fail / skipped
    std::string witness;  // first mismatching graded component when failing
    std::vector<std::string> warnings;
    double millis = 0;
};

const std::vector<std::string>& check_names();
CheckReport run_check(const std::string& name, const CheckParams& p);

std::string report_line(const CheckReport& r);

}  // namespace cparking
