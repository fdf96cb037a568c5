#include "carries/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "carries/carries_matrix.hpp"
#include "carries/error.hpp"
#include "carries/phib.hpp"
#include "carries/serialize.hpp"
#include "carries/simulator.hpp"
#include "carries/veronese.hpp"

namespace carries::cli {

namespace {

struct Options {
    long base = 0;
    int addends = 0;
    std::string numerator;
    int pole_order = 0;
    unsigned long iterations = 0;
    std::size_t columns = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
    bool approx = false;
    unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json approx_of(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.to_double());
    return out;
}

Json approx_of(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& x : m.row(i)) row.push_back(x.to_double());
        rows.push_back(std::move(row));
    }
    return rows;
}

void require_json(const Options& o, const char* what) {
    if (o.format != "json") throw UsageError(std::string(what) + " output is JSON only");
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string matrix_csv(const RatMatrix& m, bool approx) {
    if (!approx) return to_csv(m);
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
        for (const auto& x : row) os << ',' << Json(x.to_double()).dump();
        os << '\n';
    }
    return os.str();
}

ClassAFunction class_a_input(const Options& o) {
    return {parse_coefficient_list(o.numerator), o.pole_order};
}

HilbertFunction hilbert_input(const Options& o) {
    if (o.pole_order < 1) throw DomainError("Hilbert series pole order must be >= 1");
    return {parse_coefficient_list(o.numerator), o.pole_order - 1};
}

void cmd_carries_matrix(const Options& o, std::ostream& out) {
    const auto k = carries_matrix_holte(o.base, o.addends);
    if (o.format == "csv") {
        out << matrix_csv(k.matrix, o.approx);
        return;
    }
    Json j = to_json(k);
    if (o.approx) j["approx"] = approx_of(k.matrix);
    emit(out, j);
}

void cmd_stationary(const Options& o, std::ostream& out) {
    require_json(o, "stationary");
    const auto pi = carries_stationary(o.addends);
    if (!o.approx) {
        emit(out, to_json(pi));
        return;
    }
    emit(out, Json{{"stationary", to_json(pi)}, {"approx", approx_of(pi)}});
}

void emit_class_a(const Options& o, const ClassAFunction& f, std::ostream& out) {
    Json j = to_json(f);
    if (o.approx) j["approx"] = approx_of(f.numerator().coefficients());
    emit(out, j);
}

void cmd_phib_apply(const Options& o, std::ostream& out) {
    require_json(o, "phib-apply");
    const auto f = class_a_input(o);
    const auto via_matrix = phi_b_matrix(f, o.base);
    if (via_matrix != phi_b_oracle(f, o.base)) {
        throw ConsistencyError("carries-matrix route and series route disagree");
    }
    emit_class_a(o, via_matrix, out);
}

void cmd_phib_iterate(const Options& o, std::ostream& out) {
    require_json(o, "phib-iterate");
    emit_class_a(o, phi_b_iterate(class_a_input(o), o.base, o.iterations), out);
}

void cmd_phib_limit(const Options& o, std::ostream& out) {
    require_json(o, "phib-limit");
    emit_class_a(o, phi_b_limit(class_a_input(o)), out);
}

void cmd_converge(const Options& o, std::ostream& out) {
    const auto f = class_a_input(o);
    const auto trace = convergence_trace(f, o.base, o.iterations);
    if (o.format == "csv") {
        out << (o.approx ? "r,distance,approx\n" : "r,distance\n");
        for (std::size_t r = 0; r < trace.size(); ++r) {
            out << r + 1 << ',' << trace[r];
            if (o.approx) out << ',' << Json(trace[r].to_double()).dump();
            out << '\n';
        }
        return;
    }
    Json j{{"base", o.base}, {"pole_order", f.pole_order()}, {"distances", to_json(trace)}};
    if (o.approx) j["approx"] = approx_of(trace);
    emit(out, j);
}

void cmd_veronese(const Options& o, std::ostream& out) {
    require_json(o, "veronese");
    const auto g = veronese_transform(hilbert_input(o), o.base);
    Json j = to_json(g);
    if (o.approx) j["approx"] = approx_of(g.numerator().coefficients());
    emit(out, j);
}

void cmd_veronese_matrix(const Options& o, std::ostream& out) {
    if (o.pole_order < 1) throw DomainError("Hilbert series pole order must be >= 1");
    const auto m = veronese_matrix(o.pole_order - 1, o.base);
    if (o.format == "csv") {
        out << matrix_csv(m.matrix, o.approx);
        return;
    }
    Json j = to_json(m);
    if (o.approx) j["approx"] = approx_of(m.matrix);
    emit(out, j);
}

void cmd_submatrix_check(const Options& o, std::ostream& out) {
    require_json(o, "submatrix-check");
    const auto check = carries_submatrix_check(o.addends, o.base);
    Json j{{"n", o.addends}, {"base", o.base}, {"equal", check.equal}};
    if (check.mismatch) {
        j["mismatch"] = Json{{"row", check.mismatch->row},
                             {"col", check.mismatch->col},
                             {"expected", to_json(check.mismatch->expected)},
                             {"actual", to_json(check.mismatch->actual)}};
    }
    emit(out, j);
}

SimulationConfig config_of(const Options& o) {
    SimulationConfig c{o.base, o.addends, o.columns, o.seed};
    c.validate();
    return c;
}

void cmd_simulate(const Options& o, std::ostream& out) {
    const auto base_config = config_of(o);
    if (o.jobs > 1) {
        require_json(o, "multi-seed simulate");
        std::vector<SimulationConfig> configs(o.jobs, base_config);
        for (unsigned i = 0; i < o.jobs; ++i) configs[i].seed = o.seed + i;
        Json all = Json::array();
        for (const auto& s : simulate_many(configs, o.jobs)) all.push_back(to_json(s));
        emit(out, all);
        return;
    }
    const auto seq = simulate(base_config);
    if (o.format == "csv") {
        out << "carry\n";
        for (int c : seq.carries) out << c << '\n';
        return;
    }
    emit(out, to_json(seq));
}

void cmd_empirical(const Options& o, std::ostream& out) {
    const auto seq = simulate(config_of(o));
    const auto transition = empirical_transition(seq);
    if (o.format == "csv") {
        out << matrix_csv(transition.matrix, o.approx);
        return;
    }
    const auto occupation = occupation_distribution(seq);
    Json j{{"config", to_json(seq.config)},
           {"transition", to_json(transition.matrix)},
           {"unvisited", transition.unvisited_rows},
           {"occupation", to_json(occupation)}};
    if (o.approx) {
        j["transition_approx"] = approx_of(transition.matrix);
        j["occupation_approx"] = approx_of(occupation);
    }
    emit(out, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact carries chain, Eulerian and Phi_b computations", "carries-tool"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&o](CLI::App* sub, bool csv) {
        auto* opt = sub->add_option("--format", o.format, "Output format")->capture_default_str();
        opt->check(CLI::IsMember(csv ? std::vector<std::string>{"json", "csv"}
                                     : std::vector<std::string>{"json"}));
        sub->add_flag("--approx", o.approx, "Add floating-point approximations");
    };
    const auto add_base = [&o](CLI::App* sub) { sub->add_option("--base", o.base, "Base b")->required(); };
    const auto add_addends = [&o](CLI::App* sub) {
        sub->add_option("--addends", o.addends, "Number of addends m")->required();
    };
    const auto add_function = [&o](CLI::App* sub) {
        sub->add_option("--numerator", o.numerator, "Ascending coefficients, e.g. 1,0,-3/2")->required();
        sub->add_option("--pole-order", o.pole_order, "Exponent of (1-x) in the denominator")->required();
    };
    const auto add_simulation = [&](CLI::App* sub) {
        add_base(sub);
        add_addends(sub);
        sub->add_option("--columns", o.columns, "Digit columns to add")->required();
        sub->add_option("--seed", o.seed, "Seed for std::mt19937_64")->required();
    };

    std::vector<std::pair<CLI::App*, std::function<void(const Options&, std::ostream&)>>> commands;
    const auto add = [&](const char* name, const char* help, auto&& configure,
                         void (*handler)(const Options&, std::ostream&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        configure(sub);
        commands.emplace_back(sub, handler);
    };

    add("carries-matrix", "Carries transition matrix K_b for m addends",
        [&](CLI::App* s) { add_base(s); add_addends(s); add_format(s, true); }, cmd_carries_matrix);
    add("stationary", "Eulerian stationary law A(m,j)/m!",
        [&](CLI::App* s) { add_addends(s); add_format(s, false); }, cmd_stationary);
    add("phib-apply", "Apply Phi_b to h(x)/(1-x)^n",
        [&](CLI::App* s) { add_function(s); add_base(s); add_format(s, false); }, cmd_phib_apply);
    add("phib-iterate", "Apply Phi_b r times",
        [&](CLI::App* s) {
            add_function(s);
            add_base(s);
            s->add_option("--iterations", o.iterations, "Number of applications r")->required();
            add_format(s, false);
        },
        cmd_phib_iterate);
    add("phib-limit", "Normalized limit of Phi_b iterates",
        [&](CLI::App* s) { add_function(s); add_format(s, false); }, cmd_phib_limit);
    add("converge", "Max-norm distances of normalized iterates to the limit",
        [&](CLI::App* s) {
            add_function(s);
            add_base(s);
            s->add_option("--iterations", o.iterations, "Trace length r_max")->required();
            add_format(s, true);
        },
        cmd_converge);
    add("veronese", "Numerator of every b-th term of h(x)/(1-x)^p",
        [&](CLI::App* s) { add_function(s); add_base(s); add_format(s, false); }, cmd_veronese);
    add("veronese-matrix", "Matrix M_b of the b-th term transform for pole order p = n+1",
        [&](CLI::App* s) {
            s->add_option("--pole-order", o.pole_order, "Pole order p = n+1")->required();
            add_base(s);
            add_format(s, true);
        },
        cmd_veronese_matrix);
    add("submatrix-check", "Compare the interior of M_b with the carries matrix for n addends",
        [&](CLI::App* s) { add_addends(s); add_base(s); add_format(s, false); }, cmd_submatrix_check);
    add("simulate", "Simulate the carries chain by adding random digits",
        [&](CLI::App* s) {
            add_simulation(s);
            s->add_option("--jobs", o.jobs, "Run seeds seed..seed+jobs-1 concurrently")
                ->check(CLI::Range(1U, 1024U));
            add_format(s, true);
        },
        cmd_simulate);
    add("empirical", "Empirical transition matrix and occupation law of a simulated run",
        [&](CLI::App* s) { add_simulation(s); add_format(s, true); }, cmd_empirical);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const auto selected = std::find_if(commands.begin(), commands.end(),
                                       [](const auto& c) { return c.first->parsed(); });
    std::ostringstream buffer;
    try {
        selected->second(o, buffer);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ConsistencyError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitDomain;
    }
    out << buffer.str();
    return kExitOk;
}

}  // namespace carries::cli
