#include "baer/report_io.hpp"

#include <sstream>

namespace baer {

namespace {

std::string beta_text(const SingularityInfo& s) {
    return s.at_infinity ? "inf" : std::to_string(s.beta.v);
}

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

nlohmann::json opt_class(const std::optional<QuadClass>& v) {
    if (!v) return nullptr;
    return to_string(*v);
}

}  // namespace

nlohmann::json to_json(const SingularityInfo& s) {
    nlohmann::json j;
    j["singular"] = s.singular;
    if (!s.singular) return j;
    j["point"] = {s.point.c[0].v, s.point.c[1].v, s.point.c[2].v, s.point.c[3].v};
    j["at_infinity"] = s.at_infinity;
    j["beta"] = beta_text(s);
    j["beta1"] = s.beta1.v;
    j["cone_kind"] = to_string(s.cone_kind);
    j["cone_lines"] = s.cone_lines;
    j["alpha_lines"] = s.alpha_lines;
    return j;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["q"] = r.q;
    j["conic"] = r.conic;
    j["case"] = to_string(r.kase);
    j["k"] = r.k;
    j["S_q"] = opt(r.S_q);
    j["n0"] = opt(r.n0);
    j["n_inf"] = opt(r.n_inf);
    j["alpha"] = opt(r.alpha);
    j["singularity"] = r.singularity ? to_json(*r.singularity) : nlohmann::json(nullptr);
    j["delta_class"] = opt_class(r.delta_class);
    j["delta_prime_class"] = opt_class(r.delta_prime_class);
    j["kappa_zero"] = opt(r.kappa_zero);
    j["predicted"] = r.predicted;
    j["oracle"] = r.oracle;
    j["match"] = r.match;
    j["violations"] = r.violations;
    return j;
}

const std::string& csv_header() {
    static const std::string header =
        "q,case,k,S_q,n0,alpha,beta,delta_class,delta_prime_class,kappa_zero,predicted,oracle,match";
    return header;
}

std::string to_csv_row(const Report& r) {
    std::ostringstream os;
    auto field = [&](const auto& v) {
        if (v) os << *v;
        os << ',';
    };
    os << r.q << ',' << to_string(r.kase) << ',' << r.k << ',';
    field(r.S_q);
    field(r.n0);
    field(r.alpha);
    if (r.singularity) os << beta_text(*r.singularity);
    os << ',';
    if (r.delta_class) os << to_string(*r.delta_class);
    os << ',';
    if (r.delta_prime_class) os << to_string(*r.delta_prime_class);
    os << ',';
    if (r.kappa_zero) os << (*r.kappa_zero ? "true" : "false");
    os << ',';
    os << r.predicted << ',' << r.oracle << ',' << (r.match ? "true" : "false");
    return os.str();
}

}  // namespace baer
