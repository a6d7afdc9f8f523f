#ifndef WHQ_REPORT_HPP
#define WHQ_REPORT_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace whq {

struct CheckLine {
    std::string id;
    bool holds = false;
    std::string note;
};

bool all_hold(const std::vector<CheckLine>& lines);

nlohmann::ordered_json lines_json(const std::vector<CheckLine>& lines);

struct NamedCheck {
    std::string id;
    std::function<bool()> eval;
};

// Evaluates checks (in parallel when WHQ_THREADS / the core count allows) and
// returns their verdicts in input order.
std::vector<CheckLine> run_checks(const std::vector<NamedCheck>& checks);

unsigned max_threads();

} // namespace whq

#endif
