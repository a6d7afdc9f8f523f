#include "whq/report.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace whq {

bool all_hold(const std::vector<CheckLine>& lines) {
    for (const auto& l : lines)
        if (!l.holds) return false;
    return true;
}

nlohmann::ordered_json lines_json(const std::vector<CheckLine>& lines) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& l : lines) {
        nlohmann::ordered_json o;
        o["id"] = l.id;
        o["holds"] = l.holds;
        if (!l.note.empty()) o["note"] = l.note;
        arr.push_back(std::move(o));
    }
    return arr;
}

unsigned max_threads() {
    if (const char* env = std::getenv("WHQ_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::vector<CheckLine> run_checks(const std::vector<NamedCheck>& checks) {
    std::vector<CheckLine> out(checks.size());
    unsigned t = std::min<unsigned>(max_threads(), static_cast<unsigned>(checks.size()));
    auto work = [&](std::size_t i) {
        out[i].id = checks[i].id;
        out[i].holds = checks[i].eval();
    };
    if (t <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) work(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned k = 0; k < t; ++k)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < checks.size(); i = next.fetch_add(1))
                work(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

} // namespace whq
