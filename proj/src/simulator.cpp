#include "carries/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "carries/error.hpp"

namespace carries {

void SimulationConfig::validate() const {
    if (base < 2) throw DomainError("simulation base must be >= 2, got " + std::to_string(base));
    if (addends < 2) {
        throw DomainError("simulation needs at least 2 addends, got " + std::to_string(addends));
    }
    if (columns < 1) throw DomainError("simulation needs at least one column");
}

int next_carry(int carry, std::span<const int> digits, long base) {
    long total = carry;
    for (int d : digits) total += d;
    return static_cast<int>(total / base);
}

namespace {

class DigitSource {
public:
    DigitSource(std::uint64_t seed, long base)
        : engine_(seed),
          base_(static_cast<std::uint64_t>(base)),
          limit_(std::numeric_limits<std::uint64_t>::max() -
                 (std::numeric_limits<std::uint64_t>::max() % base_ + 1) % base_) {}

    int next() {
        // Accept raw values in [0, limit_], a range whose size is a multiple of base_.
        std::uint64_t x = engine_();
        while (x > limit_) x = engine_();
        return static_cast<int>(x % base_);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t base_;
    std::uint64_t limit_;
};

void check_carries(std::span<const int> carries, int addends) {
    if (addends < 1) throw DomainError("addends must be >= 1");
    for (int c : carries) {
        if (c < 0 || c >= addends) {
            throw DomainError("carry " + std::to_string(c) + " outside 0.." + std::to_string(addends - 1));
        }
    }
}

}  // namespace

CarrySequence simulate(const SimulationConfig& config) {
    config.validate();
    DigitSource source(config.seed, config.base);
    std::vector<int> digits(static_cast<std::size_t>(config.addends));
    CarrySequence seq{config, {}};
    seq.carries.reserve(config.columns + 1);
    seq.carries.push_back(0);
    for (std::size_t t = 0; t < config.columns; ++t) {
        for (auto& d : digits) d = source.next();
        seq.carries.push_back(next_carry(seq.carries.back(), digits, config.base));
    }
    return seq;
}

std::vector<CarrySequence> simulate_many(std::span<const SimulationConfig> configs, unsigned jobs) {
    for (const auto& c : configs) c.validate();
    std::vector<CarrySequence> out(configs.size());
    const unsigned workers = std::clamp<unsigned>(jobs, 1U, static_cast<unsigned>(std::max<std::size_t>(configs.size(), 1)));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < configs.size(); i = next++) out[i] = simulate(configs[i]);
            });
        }
    }
    return out;
}

EmpiricalTransition empirical_transition(std::span<const int> carries, int addends) {
    if (carries.size() < 2) throw DomainError("empirical transition needs at least two carries");
    check_carries(carries, addends);
    const auto m = static_cast<std::size_t>(addends);
    std::vector<long> counts(m * m, 0);
    std::vector<long> totals(m, 0);
    for (std::size_t t = 1; t < carries.size(); ++t) {
        const auto from = static_cast<std::size_t>(carries[t - 1]);
        const auto to = static_cast<std::size_t>(carries[t]);
        ++counts[from * m + to];
        ++totals[from];
    }
    EmpiricalTransition result{RatMatrix(m, m), {}};
    for (std::size_t i = 0; i < m; ++i) {
        if (totals[i] == 0) {
            result.unvisited_rows.push_back(i);
            continue;
        }
        for (std::size_t j = 0; j < m; ++j) result.matrix(i, j) = Rational(Integer(counts[i * m + j]), Integer(totals[i]));
    }
    return result;
}

EmpiricalTransition empirical_transition(const CarrySequence& seq) {
    return empirical_transition(seq.carries, seq.config.addends);
}

std::vector<Rational> occupation_distribution(std::span<const int> carries, int addends) {
    if (carries.empty()) throw DomainError("occupation distribution needs a nonempty sequence");
    check_carries(carries, addends);
    std::vector<long> counts(static_cast<std::size_t>(addends), 0);
    for (std::size_t t = 1; t < carries.size(); ++t) ++counts[static_cast<std::size_t>(carries[t])];
    const auto visits = static_cast<long>(carries.size() - 1);
    std::vector<Rational> out(counts.size());
    if (visits == 0) return out;
    for (std::size_t i = 0; i < counts.size(); ++i) out[i] = Rational(Integer(counts[i]), Integer(visits));
    return out;
}

std::vector<Rational> occupation_distribution(const CarrySequence& seq) {
    return occupation_distribution(seq.carries, seq.config.addends);
}

}  // namespace carries
