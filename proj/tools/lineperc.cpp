// lineperc: build finite projective planes, run r-neighbor line
// percolation, generate extremal constructions, evaluate bounds, search
// for extremal sets, and run Monte Carlo threshold experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lineperc/bounds.hpp"
#include "lineperc/constructions.hpp"
#include "lineperc/random_models.hpp"
#include "lineperc/search.hpp"

using namespace lineperc;
using nlohmann::json;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot open " + out_path + " for writing");
    f << text;
}

IncidencePlane make_plane(int q, const std::string& plane_file) {
    if (!plane_file.empty()) return load_plane(plane_file);
    return IncidencePlane::build_pg2(Field::make(q));
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

struct TableCell {
    int q, r;
    long long value;
    bool exact;
};

std::string render_table_text(const std::vector<TableCell>& cells) {
    std::ostringstream q_row, r_row, t_row;
    q_row << "q=  ";
    r_row << "r=  ";
    t_row << "T   ";
    for (const auto& c : cells) {
        q_row << "\t" << c.q;
        r_row << "\t" << c.r;
        t_row << "\t" << (c.exact ? "=" : ">=") << c.value;
    }
    return q_row.str() + "\n" + r_row.str() + "\n" + t_row.str() + "\n";
}

std::string render_table_csv(const std::vector<TableCell>& cells) {
    std::string out = "q,r,T,exact\n";
    for (const auto& c : cells)
        out += std::to_string(c.q) + "," + std::to_string(c.r) + "," + std::to_string(c.value) +
               "," + (c.exact ? "1" : "0") + "\n";
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"r-neighbor line percolation on finite projective planes"};
    app.require_subcommand(1);

    // ---- plane ----
    auto* plane_cmd = app.add_subcommand("plane", "build PG(2,q) or validate a plane file");
    int plane_q = 0;
    std::string plane_out, plane_in;
    plane_cmd->add_option("--q", plane_q, "plane order (prime power)");
    plane_cmd->add_option("--out", plane_out, "output plane JSON path");
    plane_cmd->add_option("--load", plane_in, "load and validate this plane file instead");

    // ---- percolate ----
    auto* perc_cmd = app.add_subcommand("percolate", "run the infection dynamic from a point set");
    int perc_q = 0, perc_r = 0;
    std::string perc_plane, perc_points, perc_points_file, perc_out;
    bool perc_trace = false;
    perc_cmd->add_option("--q", perc_q, "order of a native PG(2,q)");
    perc_cmd->add_option("--plane", perc_plane, "plane JSON file (instead of --q)");
    perc_cmd->add_option("--points", perc_points, "comma-separated initial point indices");
    perc_cmd->add_option("--points-file", perc_points_file, "JSON array of initial point indices");
    perc_cmd->add_option("--r", perc_r, "infection threshold")->required();
    perc_cmd->add_flag("--trace", perc_trace, "include the per-round trace");
    perc_cmd->add_option("--out", perc_out, "output JSON path");

    // ---- construct ----
    auto* cons_cmd = app.add_subcommand("construct", "emit a verified named construction");
    std::string cons_name, cons_out;
    int cons_q = 0, cons_r = 0, cons_m = 0, cons_center = 0, cons_k = 0;
    std::optional<uint64_t> cons_seed;
    uint64_t cons_seed_raw = 0;
    cons_cmd->add_option("name", cons_name,
                         "broom|oval|hyperoval|gplines|minperc|t3|slow|dualhyper|hypercomp")
        ->required();
    cons_cmd->add_option("--q", cons_q, "plane order")->required();
    cons_cmd->add_option("--r", cons_r, "infection threshold");
    cons_cmd->add_option("--m", cons_m, "broom arity (broom only)");
    cons_cmd->add_option("--center", cons_center, "broom center point (default 0)");
    cons_cmd->add_option("--k", cons_k, "line count (gplines only)");
    auto* seed_opt =
        cons_cmd->add_option("--shuffle-seed", cons_seed_raw, "randomize free picks (probing)");
    cons_cmd->add_option("--out", cons_out, "output JSON path");

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form parameter bounds");
    int bounds_q = 0, bounds_r = 0;
    std::string bounds_param = "all", bounds_out;
    bounds_cmd->add_option("--q", bounds_q, "plane order")->required();
    bounds_cmd->add_option("--r", bounds_r, "infection threshold")->required();
    bounds_cmd->add_option("--param", bounds_param, "m|M|T|p|all (default all)");
    bounds_cmd->add_option("--out", bounds_out, "output JSON path");

    // ---- search ----
    auto* search_cmd = app.add_subcommand("search", "extremal set search");
    std::string search_target, search_strategy = "exact", search_out;
    int search_q = 0, search_r = 0;
    uint64_t search_seed = 0;
    bool search_symmetry = false;
    Budget search_budget;
    bool search_seed_given = false;
    search_cmd->add_option("target", search_target, "min|max-nonperc|max-time")->required();
    search_cmd->add_option("--q", search_q, "plane order")->required();
    search_cmd->add_option("--r", search_r, "infection threshold")->required();
    search_cmd->add_option("--strategy", search_strategy,
                           "exact|random|hillclimb (max-time only, default exact)");
    search_cmd->add_option("--max-nodes", search_budget.max_nodes, "node budget");
    search_cmd->add_option("--max-seconds", search_budget.max_seconds, "wall clock budget");
    search_cmd->add_flag("--symmetry", search_symmetry, "fix the first point to index 0");
    search_cmd->add_option("--seed", search_seed, "rng seed (required for stochastic strategies)")
        ->each([&](const std::string&) { search_seed_given = true; });
    search_cmd->add_option("--out", search_out, "output JSON path");

    // ---- mc ----
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo experiments");
    std::string mc_mode, mc_grid, mc_out;
    int mc_q = 0, mc_r = 0, mc_trials = 200, mc_threads = 1;
    double mc_p = -1;
    uint64_t mc_seed = 0;
    bool mc_seed_given = false;
    mc_cmd->add_option("mode", mc_mode, "prob|scan|bottleneck")->required();
    mc_cmd->add_option("--q", mc_q, "plane order")->required();
    mc_cmd->add_option("--r", mc_r, "infection threshold")->required();
    mc_cmd->add_option("--p", mc_p, "point probability (prob mode)");
    mc_cmd->add_option("--grid", mc_grid,
                       "comma-separated probabilities, or factors of p* with --grid-pstar");
    bool mc_grid_pstar = false;
    mc_cmd->add_flag("--grid-pstar", mc_grid_pstar, "interpret --grid entries as multiples of p*");
    mc_cmd->add_option("--trials", mc_trials, "trials per estimate (default 200)");
    mc_cmd->add_option("--threads", mc_threads, "worker threads (default 1)");
    mc_cmd->add_option("--seed", mc_seed, "master seed (required)")
        ->each([&](const std::string&) { mc_seed_given = true; });
    mc_cmd->add_option("--out", mc_out, "output CSV path");

    // ---- table ----
    auto* table_cmd = app.add_subcommand("table", "maximum-percolation-time table");
    int table_qmax = 3;
    uint64_t table_seed = 0;
    bool table_seed_given = false;
    uint64_t table_nodes = 2000000;
    std::string table_format = "text", table_out;
    table_cmd->add_option("--qmax", table_qmax, "3, 5 or 7")->required();
    table_cmd->add_option("--seed", table_seed, "rng seed (required for qmax >= 5)")
        ->each([&](const std::string&) { table_seed_given = true; });
    table_cmd->add_option("--max-closures", table_nodes, "closure budget per heuristic cell");
    table_cmd->add_option("--format", table_format, "text|csv (default text)");
    table_cmd->add_option("--out", table_out, "output path");

    CLI11_PARSE(app, argc, argv);

    if (*seed_opt) cons_seed = cons_seed_raw;

    if (plane_cmd->parsed()) {
        json config{{"subcommand", "plane"}, {"q", plane_q}, {"out", plane_out}, {"load", plane_in}};
        if (!plane_in.empty()) {
            IncidencePlane pl = load_plane(plane_in); // throws AxiomViolation when invalid
            json j{{"config", config},
                   {"q", pl.order()},
                   {"points", pl.num_points()},
                   {"lines", pl.num_lines()},
                   {"valid", true}};
            emit(j.dump(2) + "\n", plane_out);
            return 0;
        }
        if (plane_q < 2) throw BadRange("plane: need --q >= 2 or --load FILE");
        IncidencePlane pl = IncidencePlane::build_pg2(Field::make(plane_q));
        if (!plane_out.empty()) save_plane(pl, plane_out);
        json j{{"config", config},
               {"q", pl.order()},
               {"points", pl.num_points()},
               {"lines", pl.num_lines()},
               {"written", plane_out}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (perc_cmd->parsed()) {
        IncidencePlane pl = make_plane(perc_q, perc_plane);
        std::vector<int> pts;
        if (!perc_points_file.empty()) {
            std::ifstream f(perc_points_file);
            if (!f) throw ParseError("cannot open " + perc_points_file);
            json arr = json::parse(f, nullptr, false);
            if (arr.is_discarded() || !arr.is_array())
                throw ParseError("points file must be a JSON array");
            pts = arr.get<std::vector<int>>();
        } else {
            pts = parse_int_list(perc_points);
        }
        for (int p : pts)
            if (p < 0 || p >= pl.num_points()) throw BadRange("point index out of range");
        PointSet a = PointSet::from_indices(pl.num_points(), pts);
        auto tr = closure(pl, a, perc_r);
        json config{{"subcommand", "percolate"}, {"q", pl.order()},   {"r", perc_r},
                    {"points", pts},             {"trace", perc_trace}, {"out", perc_out}};
        json j{{"config", config},
               {"percolates", tr.percolates},
               {"closure_size", tr.closure_points.count()},
               {"closure_rounds", tr.closure_round()},
               {"infected_lines", tr.closure_lines.count()}};
        if (tr.time) j["time"] = *tr.time;
        if (perc_trace) {
            json rounds = json::array();
            for (const auto& rec : tr.rounds)
                rounds.push_back({{"lines", rec.lines}, {"points", rec.points}});
            j["rounds"] = std::move(rounds);
        }
        emit(j.dump(2) + "\n", perc_out);
        return 0;
    }

    if (cons_cmd->parsed()) {
        IncidencePlane pl = IncidencePlane::build_pg2(Field::make(cons_q));
        json config{{"subcommand", "construct"}, {"name", cons_name}, {"q", cons_q},
                    {"r", cons_r},               {"m", cons_m},       {"center", cons_center},
                    {"k", cons_k},               {"out", cons_out}};
        if (cons_seed) config["shuffle_seed"] = *cons_seed;
        std::string payload;
        using namespace constructions;
        if (cons_name == "broom") {
            PointSet a = r_broom(pl, cons_center, cons_m > 0 ? cons_m : cons_r);
            json j{{"name", "r_broom"},
                   {"q", cons_q},
                   {"r", cons_r},
                   {"point_indices", a.to_vector()},
                   {"checks", json::array()}};
            payload = j.dump(2) + "\n";
        } else {
            ConstructionResult res;
            if (cons_name == "oval") {
                res = conic_oval(pl);
            } else if (cons_name == "hyperoval") {
                res = hyperoval(pl);
            } else if (cons_name == "gplines") {
                auto lines = general_position_lines(pl, cons_k > 0 ? cons_k : cons_q + 1);
                json j{{"name", "general_position_lines"},
                       {"q", cons_q},
                       {"k", int(lines.size())},
                       {"line_indices", lines}};
                payload = j.dump(2) + "\n";
            } else if (cons_name == "minperc") {
                res = min_percolating_from_general_position(pl, cons_r, cons_seed);
            } else if (cons_name == "t3") {
                res = minimal_t3_set(pl, cons_r, cons_seed);
            } else if (cons_name == "slow") {
                res = slow_percolating_set(pl, cons_r, cons_seed);
            } else if (cons_name == "dualhyper") {
                res = dual_hyperoval_union(pl, cons_r > 0 ? std::optional<int>(cons_r)
                                                          : std::nullopt);
            } else if (cons_name == "hypercomp") {
                res = hyperoval_complement(pl, cons_r > 0 ? std::optional<int>(cons_r)
                                                          : std::nullopt);
            } else {
                throw BadRange("unknown construction: " + cons_name);
            }
            if (payload.empty()) {
                json j = json::parse(res.to_json());
                payload = j.dump(2) + "\n";
            }
        }
        json j = json::parse(payload);
        j["config"] = config;
        emit(j.dump(2) + "\n", cons_out);
        return 0;
    }

    if (bounds_cmd->parsed()) {
        json config{{"subcommand", "bounds"},
                    {"q", bounds_q},
                    {"r", bounds_r},
                    {"param", bounds_param},
                    {"out", bounds_out}};
        json reports = json::array();
        auto add = [&](const BoundReport& rep) { reports.push_back(json::parse(rep.to_json())); };
        if (bounds_param == "m" || bounds_param == "all") add(m_r_bounds(bounds_q, bounds_r));
        if (bounds_param == "M" || bounds_param == "all") add(M_r_bounds(bounds_q, bounds_r));
        if (bounds_param == "T" || bounds_param == "all") add(T_r_bounds(bounds_q, bounds_r));
        if (bounds_param == "p" || bounds_param == "all") {
            json p{{"parameter", "p_c"},
                   {"q", bounds_q},
                   {"r", bounds_r},
                   {"value", critical_p(bounds_q, bounds_r)},
                   {"exponent", threshold_exponent(bounds_r).str()},
                   {"cite", "thm:7.2"}};
            reports.push_back(std::move(p));
        }
        json j{{"config", config}, {"reports", reports}};
        emit(j.dump(2) + "\n", bounds_out);
        return 0;
    }

    if (search_cmd->parsed()) {
        bool stochastic = search_target == "max-time" && search_strategy != "exact";
        if (stochastic && !search_seed_given)
            throw BadRange("search: stochastic strategies require --seed");
        search_budget.symmetry = search_symmetry;
        IncidencePlane pl = IncidencePlane::build_pg2(Field::make(search_q));
        SearchOutcome out;
        if (search_target == "min") {
            out = find_min_percolating(pl, search_r, search_budget);
        } else if (search_target == "max-nonperc") {
            out = find_max_nonpercolating(pl, search_r, search_budget);
        } else if (search_target == "max-time") {
            out = find_max_time(pl, search_r, search_strategy, search_budget, search_seed);
        } else {
            throw BadRange("unknown search target: " + search_target);
        }
        json config{{"subcommand", "search"},
                    {"target", search_target},
                    {"q", search_q},
                    {"r", search_r},
                    {"strategy", search_strategy},
                    {"max_nodes", search_budget.max_nodes},
                    {"max_seconds", search_budget.max_seconds},
                    {"symmetry", search_symmetry},
                    {"seed", search_seed},
                    {"out", search_out}};
        json j = json::parse(out.to_json());
        j["config"] = config;
        emit(j.dump(2) + "\n", search_out);
        return 0;
    }

    if (mc_cmd->parsed()) {
        if (!mc_seed_given) throw BadRange("mc: --seed is required");
        IncidencePlane pl = IncidencePlane::build_pg2(Field::make(mc_q));
        json config{{"subcommand", "mc"}, {"mode", mc_mode},       {"q", mc_q},
                    {"r", mc_r},          {"trials", mc_trials},   {"seed", mc_seed},
                    {"threads", mc_threads}, {"out", mc_out}};
        if (mc_mode == "prob") {
            if (mc_p < 0) throw BadRange("mc prob: --p is required");
            config["p"] = mc_p;
            auto est = percolation_probability(pl, mc_r, mc_p, mc_trials, mc_seed, mc_threads);
            std::string csv = scan_csv({est});
            emit(csv, mc_out);
            json j{{"config", config},
                   {"estimate", est.estimate},
                   {"ci_low", est.ci_low},
                   {"ci_high", est.ci_high}};
            if (!mc_out.empty()) std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (mc_mode == "scan") {
            auto grid = parse_double_list(mc_grid);
            if (grid.empty()) throw BadRange("mc scan: --grid is required");
            if (mc_grid_pstar) {
                double pstar = critical_p(mc_q, mc_r);
                for (auto& g : grid) g *= pstar;
            }
            config["grid"] = grid;
            auto rows = threshold_scan(pl, mc_r, grid, mc_trials, mc_seed, mc_threads);
            emit(scan_csv(rows), mc_out);
            if (!mc_out.empty()) std::cout << json{{"config", config}}.dump(2) << "\n";
            return 0;
        }
        if (mc_mode == "bottleneck") {
            auto sum = bottleneck_experiment(pl, mc_r, mc_trials, mc_seed, mc_threads);
            emit(bottleneck_csv(sum), mc_out);
            json j{{"config", config},
                   {"equal_fraction", sum.equal_fraction},
                   {"mean_tau_r", sum.mean_tau_r}};
            if (!mc_out.empty()) std::cout << j.dump(2) << "\n";
            return 0;
        }
        throw BadRange("unknown mc mode: " + mc_mode);
    }

    if (table_cmd->parsed()) {
        if (table_qmax != 3 && table_qmax != 5 && table_qmax != 7)
            throw BadRange("table: --qmax must be 3, 5 or 7");
        if (table_qmax >= 5 && !table_seed_given)
            throw BadRange("table: --seed is required for qmax >= 5");
        std::vector<std::pair<int, int>> cells{{3, 2}, {3, 3}};
        if (table_qmax >= 5) {
            cells.insert(cells.end(), {{5, 3}, {5, 4}, {5, 5}});
        }
        if (table_qmax >= 7) {
            cells.insert(cells.end(), {{7, 5}, {7, 6}, {7, 7}});
        }
        std::vector<TableCell> rows;
        for (auto [q, r] : cells) {
            IncidencePlane pl = IncidencePlane::build_pg2(Field::make(q));
            Budget b;
            b.max_nodes = table_nodes;
            b.max_seconds = 600;
            SearchOutcome out = q == 3 ? find_max_time(pl, r, "exact", b, table_seed)
                                       : find_max_time(pl, r, "hillclimb", b, table_seed);
            rows.push_back({q, r, out.value, out.exact});
        }
        std::string payload =
            table_format == "csv" ? render_table_csv(rows) : render_table_text(rows);
        emit(payload, table_out);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const VerificationError& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
