#include "scenario.hpp"

#include <cmath>
#include <initializer_list>
#include <set>

#include "errors.hpp"
#include "json.hpp"

namespace lfcsim {

using nlohmann::json;

Scenario default_scenario() {
    Scenario s;
    s.load_profile = {{0.0, 0.0, 0.0},
                      {1.0, 0.01, 0.0},
                      {30.0, 0.01, 0.005},
                      {50.0, 0.005, 0.005}};
    return s;
}

bool is_preset_name(const std::string& name) {
    return name == "default" || name == "scenario1" || name == "scenario2" ||
           name == "scenario3" || name == "scenario4";
}

Scenario preset_scenario(const std::string& name) {
    Scenario s = default_scenario();
    s.name = name;
    if (name == "default" || name == "scenario1") {
        // nominal loads only
    } else if (name == "scenario2") {
        s.attack.type = AttackType::load_altering;
        s.attack.target_area = 1;
        s.attack.magnitude = 0.1;
        s.attack.start = 50.0;
        s.attack.end = 52.0;
    } else if (name == "scenario3") {
        s.attack.type = AttackType::dos_actuation;
        s.attack.target_area = 2;
        s.attack.loss_prob = 0.90;
        s.attack.start = 0.0;
        s.attack.end = s.horizon;
    } else if (name == "scenario4") {
        s.attack.type = AttackType::dos_measurement;
        s.attack.target_area = 2;
        s.attack.loss_prob = 0.95;
        s.attack.start = 0.0;
        s.attack.end = s.horizon;
    } else {
        throw ValidationError("unknown preset: " + name);
    }
    return s;
}

void validate(const Scenario& s) {
    validate(s.plant);
    if (!(s.horizon > 0.0)) throw ValidationError("horizon must be > 0");
    if (!(s.dt > 0.0)) throw ValidationError("dt must be > 0");
    if (s.alpha == 0.0) throw ValidationError("alpha must be nonzero");
    if (!(s.kp > 0.0)) throw ValidationError("kp must be > 0");
    if (!(s.tau >= 2.0 * s.dt)) throw ValidationError("tau must be >= 2*dt");
    if (!std::isfinite(s.k1) || !std::isfinite(s.k2))
        throw ValidationError("integrator gains must be finite");
    if (s.load_profile.empty() || s.load_profile.front().t != 0.0)
        throw ValidationError("load_profile must start at t = 0");
    for (std::size_t i = 1; i < s.load_profile.size(); ++i)
        if (!(s.load_profile[i].t > s.load_profile[i - 1].t))
            throw ValidationError("load_profile times must be strictly increasing");
    if (s.attack.type != AttackType::none) {
        if (!(s.attack.start >= 0.0 && s.attack.start < s.attack.end &&
              s.attack.end <= s.horizon))
            throw ValidationError("attack window must satisfy 0 <= start < end <= horizon");
        if (!std::isfinite(s.attack.magnitude))
            throw ValidationError("attack magnitude must be finite");
        if (!(s.attack.loss_prob >= 0.0 && s.attack.loss_prob <= 1.0))
            throw ValidationError("loss_prob must be in [0, 1]");
        if (s.attack.target_area != 1 && s.attack.target_area != 2)
            throw ValidationError("target_area must be 1 or 2");
    }
}

std::array<double, 2> load_at(const std::vector<LoadBreakpoint>& profile, double t) {
    std::array<double, 2> l{0.0, 0.0};
    for (const LoadBreakpoint& bp : profile) {
        if (bp.t > t) break;
        l = {bp.dp_load_1, bp.dp_load_2};
    }
    return l;
}

namespace {

void check_keys(const json& o, std::initializer_list<const char*> allowed,
                const std::string& ctx) {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& item : o.items())
        if (!ok.count(item.key()))
            throw ParseError("unknown key \"" + item.key() + "\" in " + ctx);
}

double get_num(const json& o, const char* key, double fallback) {
    if (!o.contains(key)) return fallback;
    const json& v = o.at(key);
    if (!v.is_number()) throw ParseError(std::string(key) + " must be a number");
    return v.get<double>();
}

AreaParams parse_area(const json& o, const AreaParams& d, const std::string& ctx) {
    if (!o.is_object()) throw ParseError(ctx + " must be an object");
    check_keys(o, {"t_gov", "t_turb", "k_ps", "t_ps", "r_droop", "bias_b"}, ctx);
    AreaParams a;
    a.t_gov = get_num(o, "t_gov", d.t_gov);
    a.t_turb = get_num(o, "t_turb", d.t_turb);
    a.k_ps = get_num(o, "k_ps", d.k_ps);
    a.t_ps = get_num(o, "t_ps", d.t_ps);
    a.r_droop = get_num(o, "r_droop", d.r_droop);
    a.bias_b = get_num(o, "bias_b", d.bias_b);
    return a;
}

json area_to_json(const AreaParams& a) {
    return json{{"t_gov", a.t_gov},   {"t_turb", a.t_turb},
                {"k_ps", a.k_ps},     {"t_ps", a.t_ps},
                {"r_droop", a.r_droop}, {"bias_b", a.bias_b}};
}

const char* attack_type_name(AttackType t) {
    switch (t) {
        case AttackType::none: return "none";
        case AttackType::load_altering: return "load_altering";
        case AttackType::dos_actuation: return "dos_actuation";
        case AttackType::dos_measurement: return "dos_measurement";
    }
    return "none";
}

json scenario_to_json_value(const Scenario& s) {
    json profile = json::array();
    for (const LoadBreakpoint& bp : s.load_profile)
        profile.push_back(json::array({bp.t, bp.dp_load_1, bp.dp_load_2}));
    return json{
        {"name", s.name},
        {"controller", s.controller == ControllerKind::mfc ? "mfc" : "integrator"},
        {"alpha", s.alpha},
        {"kp", s.kp},
        {"tau", s.tau},
        {"warm_up", s.warm_up == WarmUpPolicy::zero ? "zero" : "hold"},
        {"k1", s.k1},
        {"k2", s.k2},
        {"output", s.output == OutputKind::ace ? "ace" : "df"},
        {"plant", json{{"area1", area_to_json(s.plant.area[0])},
                       {"area2", area_to_json(s.plant.area[1])},
                       {"t12", s.plant.t12}}},
        {"load_profile", profile},
        {"attack", json{{"type", attack_type_name(s.attack.type)},
                        {"start", s.attack.start},
                        {"end", s.attack.end},
                        {"magnitude", s.attack.magnitude},
                        {"loss_prob", s.attack.loss_prob},
                        {"target_area", s.attack.target_area},
                        {"hold_policy", s.attack.hold_policy == HoldPolicy::hold_last
                                            ? "hold-last"
                                            : "zero"}}},
        {"horizon", s.horizon},
        {"dt", s.dt},
        {"base_seed", s.base_seed},
    };
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    check_keys(doc,
               {"name", "controller", "alpha", "kp", "tau", "warm_up", "k1", "k2",
                "output", "plant", "load_profile", "attack", "horizon", "dt",
                "base_seed"},
               "scenario");

    Scenario s = default_scenario();
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("name must be a string");
        s.name = doc["name"].get<std::string>();
    }
    if (doc.contains("controller")) {
        const json& v = doc["controller"];
        if (!v.is_string()) throw ParseError("controller must be a string");
        const std::string kind = v.get<std::string>();
        if (kind == "mfc") s.controller = ControllerKind::mfc;
        else if (kind == "integrator") s.controller = ControllerKind::integrator;
        else throw ParseError("controller must be \"mfc\" or \"integrator\"");
    }
    s.alpha = get_num(doc, "alpha", s.alpha);
    s.kp = get_num(doc, "kp", s.kp);
    s.tau = get_num(doc, "tau", s.tau);
    if (doc.contains("warm_up")) {
        const json& v = doc["warm_up"];
        if (!v.is_string()) throw ParseError("warm_up must be a string");
        const std::string w = v.get<std::string>();
        if (w == "zero") s.warm_up = WarmUpPolicy::zero;
        else if (w == "hold") s.warm_up = WarmUpPolicy::hold;
        else throw ParseError("warm_up must be \"zero\" or \"hold\"");
    }
    s.k1 = get_num(doc, "k1", s.k1);
    s.k2 = get_num(doc, "k2", s.k2);
    if (doc.contains("output")) {
        const json& v = doc["output"];
        if (!v.is_string()) throw ParseError("output must be a string");
        const std::string o = v.get<std::string>();
        if (o == "ace") s.output = OutputKind::ace;
        else if (o == "df") s.output = OutputKind::df;
        else throw ParseError("output must be \"ace\" or \"df\"");
    }
    if (doc.contains("plant")) {
        const json& p = doc["plant"];
        if (!p.is_object()) throw ParseError("plant must be an object");
        check_keys(p, {"area1", "area2", "t12"}, "plant");
        if (p.contains("area1"))
            s.plant.area[0] = parse_area(p["area1"], s.plant.area[0], "plant.area1");
        if (p.contains("area2"))
            s.plant.area[1] = parse_area(p["area2"], s.plant.area[1], "plant.area2");
        s.plant.t12 = get_num(p, "t12", s.plant.t12);
    }
    if (doc.contains("load_profile")) {
        const json& lp = doc["load_profile"];
        if (!lp.is_array()) throw ParseError("load_profile must be an array");
        s.load_profile.clear();
        for (const json& row : lp) {
            if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
                !row[1].is_number() || !row[2].is_number())
                throw ParseError("load_profile rows must be [t, dp_load_1, dp_load_2]");
            s.load_profile.push_back(
                {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
        }
    }
    if (doc.contains("attack")) {
        const json& a = doc["attack"];
        if (!a.is_object()) throw ParseError("attack must be an object");
        check_keys(a,
                   {"type", "start", "end", "magnitude", "loss_prob", "target_area",
                    "hold_policy"},
                   "attack");
        if (a.contains("type")) {
            const json& v = a["type"];
            if (!v.is_string()) throw ParseError("attack.type must be a string");
            const std::string t = v.get<std::string>();
            if (t == "none") s.attack.type = AttackType::none;
            else if (t == "load_altering") s.attack.type = AttackType::load_altering;
            else if (t == "dos_actuation") s.attack.type = AttackType::dos_actuation;
            else if (t == "dos_measurement") s.attack.type = AttackType::dos_measurement;
            else throw ParseError("unknown attack.type \"" + t + "\"");
        }
        s.attack.start = get_num(a, "start", s.attack.start);
        s.attack.end = get_num(a, "end", s.attack.end);
        s.attack.magnitude = get_num(a, "magnitude", s.attack.magnitude);
        s.attack.loss_prob = get_num(a, "loss_prob", s.attack.loss_prob);
        if (a.contains("target_area")) {
            const json& v = a["target_area"];
            if (!v.is_number_integer()) throw ParseError("target_area must be an integer");
            s.attack.target_area = v.get<int>();
        }
        if (a.contains("hold_policy")) {
            const json& v = a["hold_policy"];
            if (!v.is_string()) throw ParseError("hold_policy must be a string");
            const std::string h = v.get<std::string>();
            if (h == "hold-last") s.attack.hold_policy = HoldPolicy::hold_last;
            else if (h == "zero") s.attack.hold_policy = HoldPolicy::zero;
            else throw ParseError("hold_policy must be \"hold-last\" or \"zero\"");
        }
    }
    s.horizon = get_num(doc, "horizon", s.horizon);
    s.dt = get_num(doc, "dt", s.dt);
    if (doc.contains("base_seed")) {
        const json& v = doc["base_seed"];
        if (!v.is_number_integer() ||
            (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
            throw ParseError("base_seed must be a nonnegative integer");
        s.base_seed = v.get<std::uint64_t>();
    }
    validate(s);
    return s;
}

std::string scenario_to_json(const Scenario& s) {
    return scenario_to_json_value(s).dump(2) + "\n";
}

std::string defaults_document() {
    json doc{{"default", scenario_to_json_value(default_scenario())},
             {"presets", json::object()}};
    for (const char* name : {"scenario1", "scenario2", "scenario3", "scenario4"})
        doc["presets"][name] = scenario_to_json_value(preset_scenario(name));
    return doc.dump(2) + "\n";
}

}  // namespace lfcsim
