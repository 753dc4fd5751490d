#include "helly/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helly/errors.hpp"

namespace helly {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Instance instance;
    std::string line;
    bool have_dim = false;
    bool in_set = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        const auto fail = [&](const std::string& what) {
            throw MalformedInputError("line " + std::to_string(line_no) + ": " + what);
        };
        if (tokens.front() == "dim") {
            if (have_dim || tokens.size() != 2) fail("bad dim header");
            instance.dim = std::stoi(tokens[1]);
            if (instance.dim <= 0) fail("dimension must be positive");
            have_dim = true;
        } else if (tokens.front() == "class") {
            if (!have_dim || tokens.size() != 2) fail("bad class header");
            instance.classes.emplace_back();
            in_set = false;
        } else if (tokens.front() == "set") {
            if (!have_dim || tokens.size() != 2) fail("bad set header");
            instance.set_ids.push_back(tokens[1]);
            instance.sets.push_back(make_whole_space(instance.dim));
            if (!instance.classes.empty()) {
                instance.classes.back().push_back(static_cast<int>(instance.sets.size()) - 1);
            }
            in_set = true;
        } else {
            if (!in_set) fail("constraint outside a set block");
            if (static_cast<int>(tokens.size()) != instance.dim + 2) {
                fail("constraint arity does not match dimension");
            }
            LinearConstraint constraint;
            for (int j = 0; j < instance.dim; ++j) {
                constraint.coefficients.push_back(parse_rational(tokens[j]));
            }
            const auto& rel = tokens[instance.dim];
            if (rel == "<=") constraint.relation = Relation::LessEq;
            else if (rel == "=") constraint.relation = Relation::Eq;
            else fail("unknown relation '" + rel + "'");
            constraint.rhs = parse_rational(tokens[instance.dim + 1]);
            instance.sets.back().constraints.push_back(std::move(constraint));
        }
    }
    if (!have_dim) throw MalformedInputError("missing dim header");
    if (instance.sets.empty()) throw MalformedInputError("instance has no sets");
    if (!instance.classes.empty()) {
        std::size_t covered = 0;
        for (const auto& cls : instance.classes) {
            if (cls.empty()) throw MalformedInputError("empty class block");
            covered += cls.size();
        }
        if (covered != instance.sets.size()) {
            throw MalformedInputError("sets outside class blocks in a colorful instance");
        }
    }
    return instance;
}

Instance parse_instance_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream out;
    out << "dim " << instance.dim << "\n";
    const auto emit_set = [&](int i) {
        out << "set " << instance.set_ids[i] << "\n";
        for (const auto& c : instance.sets[i].constraints) {
            for (const auto& coeff : c.coefficients) out << to_string(coeff) << " ";
            out << (c.relation == Relation::Eq ? "=" : "<=") << " " << to_string(c.rhs) << "\n";
        }
    };
    if (instance.classes.empty()) {
        for (std::size_t i = 0; i < instance.sets.size(); ++i) emit_set(static_cast<int>(i));
    } else {
        for (std::size_t k = 0; k < instance.classes.size(); ++k) {
            out << "class " << k + 1 << "\n";
            for (int i : instance.classes[k]) emit_set(i);
        }
    }
    return out.str();
}

void save_instance(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MalformedInputError("cannot write instance file: " + path);
    out << serialize_instance(instance);
}

Instance instance_from_family(int dim, const std::vector<ConvexSet>& family) {
    Instance instance;
    instance.dim = dim;
    for (std::size_t i = 0; i < family.size(); ++i) {
        instance.set_ids.push_back("s" + std::to_string(i + 1));
        instance.sets.push_back(family[i]);
    }
    return instance;
}

Instance instance_from_classes(const ColorClasses& classes) {
    Instance instance;
    instance.dim = classes.d;
    for (std::size_t k = 0; k < classes.classes.size(); ++k) {
        instance.classes.emplace_back();
        for (std::size_t i = 0; i < classes.classes[k].size(); ++i) {
            instance.classes.back().push_back(static_cast<int>(instance.sets.size()));
            instance.set_ids.push_back("c" + std::to_string(k + 1) + "_" + std::to_string(i + 1));
            instance.sets.push_back(classes.classes[k][i]);
        }
    }
    return instance;
}

ColorClasses classes_from_instance(const Instance& instance) {
    std::vector<std::vector<ConvexSet>> classes;
    if (instance.classes.empty()) {
        // Monochromatic file: the colorful theorem with all classes equal.
        for (int k = 0; k <= instance.dim; ++k) classes.push_back(instance.sets);
    } else {
        for (const auto& cls : instance.classes) {
            std::vector<ConvexSet> sets;
            for (int i : cls) sets.push_back(instance.sets[i]);
            classes.push_back(std::move(sets));
        }
    }
    return make_color_classes(instance.dim, std::move(classes));
}

namespace {

nlohmann::json rational_json(const Rational& value) { return to_string(value); }

nlohmann::json point_json(const std::vector<Rational>& point) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : point) out.push_back(to_string(c));
    return out;
}

nlohmann::json subfamily_json(const SubfamilyResult& subfamily) {
    nlohmann::json out;
    out["class"] = subfamily.class_index + 1;
    out["members"] = subfamily.members;
    out["size"] = subfamily.size();
    out["beta_observed"] = rational_json(subfamily.beta_observed);
    if (subfamily.witness) out["witness"] = point_json(*subfamily.witness);
    return out;
}

}  // namespace

std::string report_to_json(const Report& report, const std::string& invocation) {
    nlohmann::json out;
    out["invocation"] = invocation;
    out["d"] = report.d;
    out["class_sizes"] = report.class_sizes;
    out["alpha"] = rational_json(report.profile.alpha);
    out["intersecting_tuples"] = report.profile.intersecting_count;
    out["total_tuples"] = report.profile.total_count;
    out["matchings"] = nlohmann::json::array();
    for (const auto& m : report.matchings) out["matchings"].push_back(m.edges);
    out["extraction"] = subfamily_json(report.extraction);
    out["extraction_bound_met"] = report.extraction_bound_met;
    out["exact_maximization_in_scale"] = report.exact_in_scale;
    out["class_maxima"] = nlohmann::json::array();
    for (const auto& cmr : report.class_maxima) {
        if (cmr.exact_max) out["class_maxima"].push_back(subfamily_json(*cmr.exact_max));
        else out["class_maxima"].push_back(nullptr);
    }
    out["beta_observed"] = rational_json(report.beta_observed);
    out["lower_bound_value"] =
        rational_json(lower_bound_value_approx(report.profile.alpha, report.d));
    out["upper_bound_value"] =
        rational_json(upper_bound_value_approx(report.profile.alpha, report.d));
    out["lower_bound_passed"] = report.lower_bound_passed;
    if (report.upper_gap_within_tolerance) {
        out["upper_gap_within_tolerance"] = *report.upper_gap_within_tolerance;
    }
    return out.dump(2);
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, const std::string& invocation) {
    std::ostringstream out;
    out << "# " << invocation << "\n";
    out << "alpha,beta_observed,lower_bound,upper_bound\n";
    for (const auto& row : rows) {
        out << to_string(row.alpha) << "," << to_string(row.beta_observed) << ","
            << to_string(row.lower_bound) << "," << to_string(row.upper_bound) << "\n";
    }
    return out.str();
}

}  // namespace helly
