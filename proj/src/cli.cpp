#include "mcloc/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mcloc/pipedream.hpp"
#include "mcloc/selftest.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcloc {

namespace {

using nlohmann::json;

std::vector<long long> parseCsvInts(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

std::string qPolyCoeffList(const QPoly& p) {
    // ascending coefficient list from degree 0; R-polynomials never have
    // negative exponents
    if (p.isZero()) return "0";
    int lo = std::min(0, p.minDegIn(0)), hi = p.degIn(0);
    std::string out;
    for (int d = lo; d <= hi; ++d) {
        if (d > lo) out += " ";
        auto it = p.terms.find(Expo{d});
        out += it == p.terms.end() ? "0" : it->second.toString();
    }
    return out;
}

json envelope(const std::string& verb) {
    return json{{"tool", "mcloc"}, {"version", "0.1.0"}, {"verb", verb}, {"records", json::array()}};
}

struct Session {
    std::string type = "A2";
    int threads = 0;

    void applyThreads() const {
#ifdef _OPENMP
        int t = threads;
        if (t <= 0) {
            if (const char* env = std::getenv("MCLOC_THREADS")) t = std::atoi(env);
        }
        if (t > 0) omp_set_num_threads(t);
#endif
    }
};

int runRPoly(const Session& s, const std::string& uStr, const std::string& wStr,
             const std::string& vStr, const std::string& format, bool all, std::ostream& out) {
    WeylGroup W(RootDatum::parse(s.type));
    HeckeFinite h(W);
    if (all) {
        json j = envelope("rpoly");
        for (int uu = 0; uu < W.size(); ++uu)
            for (int ww = 0; ww < W.size(); ++ww) {
                std::string coeffs = qPolyCoeffList(h.rPoly(uu, ww));
                if (format == "json")
                    j["records"].push_back({{"u", W.elemToString(uu)},
                                            {"w", W.elemToString(ww)},
                                            {"coefficients", coeffs}});
                else
                    out << W.elemToString(uu) << "," << W.elemToString(ww) << "," << coeffs
                        << "\n";
            }
        if (format == "json") out << j.dump(2) << "\n";
        return 0;
    }
    int u = W.parseElem(uStr), w = W.parseElem(wStr);
    QPoly r = vStr.empty() ? h.rPoly(u, w) : h.twistedR(u, w, W.parseElem(vStr));
    if (format == "json") {
        json j = envelope(vStr.empty() ? "rpoly" : "twisted-rpoly");
        j["records"].push_back({{"u", W.elemToString(u)},
                                {"w", W.elemToString(w)},
                                {"coefficients", qPolyCoeffList(r)}});
        if (!vStr.empty()) j["records"][0]["v"] = vStr;
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << W.elemToString(u) << "," << W.elemToString(w) << "," << qPolyCoeffList(r) << "\n";
    } else {
        out << qPolyCoeffList(r) << "\n";
    }
    return 0;
}

int runSubwords(const Session& s, const std::string& wordStr, const std::string& uStr,
                const std::string& vStr, const std::string& format, bool list,
                std::ostream& out) {
    WeylGroup W(RootDatum::parse(s.type));
    std::vector<int> word = parseWord(wordStr, W.rank());
    int u = W.parseElem(uStr);
    int v = vStr.empty() ? W.id() : W.parseElem(vStr);
    auto masks = collectSubwords(W, word, u);
    if (!list && format != "json") {
        out << masks.size() << "\n";
        return 0;
    }
    auto setStr = [](const std::vector<int>& xs) {
        std::string r = "{";
        for (size_t i = 0; i < xs.size(); ++i) r += (i ? "," : "") + std::to_string(xs[i]);
        return r + "}";
    };
    json j = envelope("subwords");
    for (const auto& mask : masks) {
        SubwordClass c = classifySubword(W, word, mask, v);
        std::string letters;
        for (size_t k = 0; k < word.size(); ++k) {
            if (k) letters += ".";
            letters += mask[k] ? "s" + std::to_string(word[k] + 1) : "-";
        }
        if (format == "json") {
            j["records"].push_back({{"subword", letters},
                                    {"Jplus", c.Jplus},
                                    {"Jminus", c.Jminus},
                                    {"Eplus", c.Eplus},
                                    {"Eminus", c.Eminus},
                                    {"reduced", c.reduced()},
                                    {"distinguished", c.distinguished()}});
        } else {
            out << letters << "  J+=" << setStr(c.Jplus) << " J-=" << setStr(c.Jminus)
                << " E+=" << setStr(c.Eplus) << " E-=" << setStr(c.Eminus)
                << (c.reduced() ? "  reduced" : "  not-reduced")
                << (c.distinguished() ? " distinguished" : " not-distinguished") << "\n";
        }
    }
    if (format == "json") out << j.dump(2) << "\n";
    return 0;
}

int runSmc(const Session& s, const std::string& uStr, const std::string& wStr, bool timesPrefactor,
           const std::string& chamberStr, bool jsonOut, std::ostream& out) {
    WeylGroup W(RootDatum::parse(s.type));
    LocCtx L(W);
    if (jsonOut) {
        L.buildAllColumns();
        json j = envelope("smc");
        for (int w = 0; w < W.size(); ++w)
            for (int u = 0; u < W.size(); ++u) {
                RatFun val = L.smc(u, w);
                if (timesPrefactor) val = L.prefactor(w) * val;
                j["records"].push_back({{"u", W.elemToString(u)},
                                        {"w", W.elemToString(w)},
                                        {"value", val.toString(L.names())}});
            }
        out << j.dump(2) << "\n";
        return 0;
    }
    int u = W.parseElem(uStr), w = W.parseElem(wStr);
    RatFun val = L.smc(u, w);
    if (timesPrefactor) val = L.prefactor(w) * val;
    if (!chamberStr.empty()) {
        LimitResult lim = limitAtChamber(W, val, W.parseElem(chamberStr));
        out << (lim.diverges ? std::string("DIVERGES") : lim.value.toString({"y"})) << "\n";
        return 0;
    }
    out << val.toString(L.names()) << "\n";
    return 0;
}

int runAjs(const Session& s, const std::string& uStr, const std::string& wStr, std::ostream& out) {
    WeylGroup W(RootDatum::parse(s.type));
    LocCtx L(W);
    RatFun val = L.ajsBilley(W.parseElem(uStr), W.parseElem(wStr));
    out << val.toString(L.ajsNames()) << "\n";
    return 0;
}

int runLimit(const Session& s, const std::string& uStr, const std::string& wStr,
             const std::string& vStr, std::ostream& out) {
    WeylGroup W(RootDatum::parse(s.type));
    LocCtx L(W);
    int v = vStr.empty() ? W.id() : W.parseElem(vStr);
    LimitResult lim = L.limitToTwisted(W.parseElem(uStr), v, W.parseElem(wStr));
    out << (lim.diverges ? std::string("DIVERGES") : lim.value.toString({"y"})) << "\n";
    return 0;
}

int runRichardson(const Session& s, const std::string& lamStr, const std::string& uStr,
                  const std::string& wStr, bool jsonOut, std::ostream& out) {
    WeylGroup W(RootDatum::parse(s.type));
    LocCtx L(W);
    Parabolic P(L, parseCsvInts(lamStr));
    int u = W.parseElem(uStr), w = W.parseElem(wStr);
    if (P.repPos(w) < 0 || P.reps()[P.repPos(w)] != w)
        throw CLI::ValidationError("--w must be a minimal coset representative");
    auto table = P.smcProjTable(u, w);
    json j = envelope("richardson");
    for (size_t k = 0; k < P.reps().size(); ++k) {
        if (jsonOut) {
            j["records"].push_back({{"u", W.elemToString(u)},
                                    {"w", W.elemToString(w)},
                                    {"z", W.elemToString(P.reps()[k])},
                                    {"value", table[k].toString(L.names())}});
        } else {
            out << W.elemToString(P.reps()[k]) << "  " << table[k].toString(L.names()) << "\n";
        }
    }
    if (jsonOut) out << j.dump(2) << "\n";
    return 0;
}

int runVerifyMain(const Session& s, const std::string& lamStr, const std::string& uStr,
                  const std::string& wStr, bool all, bool jsonOut, std::ostream& out) {
    WeylGroup W(RootDatum::parse(s.type));
    LocCtx L(W);
    L.buildAllColumns();
    Parabolic P(L, parseCsvInts(lamStr));
    ExtAffineCtx E(W);
    AffineLoc A(E, L);
    std::vector<std::pair<int, int>> pairs;
    if (all) {
        for (int w : P.reps())
            for (int u = 0; u < W.size(); ++u) pairs.emplace_back(u, w);
    } else {
        int w = W.parseElem(wStr);
        if (P.repPos(w) < 0 || P.reps()[P.repPos(w)] != w)
            throw CLI::ValidationError("--w must be a minimal coset representative");
        pairs.emplace_back(W.parseElem(uStr), w);
    }
    bool pass = true;
    json j = envelope("verify-main");
    for (auto [u, w] : pairs) {
        auto rep = A.verifyMain(P, u, w);
        pass = pass && rep.pass;
        for (const auto& row : rep.rows) {
            json rec{{"f", E.toString(rep.f)},
                     {"u", W.elemToString(u)},
                     {"w", W.elemToString(w)},
                     {"fixed_point", W.elemToString(P.reps()[row.fixedPointRep])},
                     {"lhs", row.lhs.toString(L.names())},
                     {"rhs", row.rhs.toString(L.names())},
                     {"equal", row.equal}};
            if (jsonOut)
                j["records"].push_back(std::move(rec));
            else
                out << (row.equal ? "OK   " : "DIFF ") << rec["u"].get<std::string>() << "  "
                    << rec["w"].get<std::string>() << "  at " << rec["fixed_point"].get<std::string>()
                    << "\n";
        }
    }
    if (jsonOut) out << j.dump(2) << "\n";
    if (!jsonOut) out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int runPipedream(int n, int k, const std::string& fStr, bool count, bool gt, bool verify,
                 bool ascii, bool jsonOut, std::ostream& out) {
    std::vector<long long> win = parseCsvInts(fStr);
    if (static_cast<int>(win.size()) != n) throw CLI::ValidationError("--f must have n entries");
    PipeRing ring{k, n};
    json j = envelope("pipedream");
    auto dreams = enumeratePipeDreams(win, k, n);
    if (ascii) {
        for (const auto& pd : dreams) out << pd.ascii() << "\n";
    }
    if (jsonOut) {
        for (const auto& pd : dreams) {
            json mat = json::array();
            for (int r = 0; r < k; ++r) {
                json row = json::array();
                for (int c = 1; c <= n; ++c) row.push_back(pd.isCross(r, c) ? 1 : 0);
                mat.push_back(std::move(row));
            }
            j["records"].push_back({{"tiles", std::move(mat)}});
        }
    }
    if (count) out << dreams.size() << "\n";
    if (gt) out << gtilde(win, k, n).toString(ring.names()) << "\n";
    int rc = 0;
    if (verify) {
        WeylGroup W(RootDatum::GL(n));
        LocCtx L(W);
        L.buildAllColumns();
        std::vector<long long> lam(n, 0);
        for (int i = 0; i < k; ++i) lam[i] = 1;
        Parabolic P(L, lam);
        ExtAffineCtx E(W);
        auto rep = verifyPositroid(win, k, n, L, P, E);
        for (const auto& row : rep.rows) {
            std::string sub;
            for (size_t i = 0; i < row.subset.size(); ++i)
                sub += (i ? "," : "") + std::to_string(row.subset[i]);
            out << (row.equal ? "OK   {" : "DIFF {") << sub << "}\n";
        }
        out << (rep.pass ? "PASS" : "FAIL") << "\n";
        rc = rep.pass ? 0 : 1;
    }
    if (jsonOut) out << j.dump(2) << "\n";
    return rc;
}

}  // namespace

int cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact localization calculator for flag-variety classes"};
    app.require_subcommand(1);

    Session s;
    app.add_option("--threads", s.threads, "cap the worker thread count");

    std::string uStr = "e", wStr = "e", vStr, wordStr, lamStr = "1,0", fStr, format = "text",
                chamberStr;
    bool jsonOut = false, timesPrefactor = false, all = false;
    bool pdCount = false, pdGtilde = false, pdVerify = false, pdAscii = false, listFlag = false;
    int nOpt = 2, kOpt = 1, onlyId = 0;
    uint64_t seed = 2024;

    auto addCommon = [&](CLI::App* c) {
        c->add_option("--type", s.type, "root datum, e.g. A2, B2, G2, GL3");
        c->add_option("--format", format, "text|json|csv");
    };

    bool rpAll = false;
    CLI::App* rp = app.add_subcommand("rpoly", "R-polynomial as an ascending coefficient list");
    addCommon(rp);
    rp->add_option("--u", uStr);
    rp->add_option("--w", wStr);
    rp->add_flag("--all", rpAll, "dump the full table as CSV rows");

    CLI::App* trp = app.add_subcommand("twisted-rpoly", "twisted R-polynomial");
    addCommon(trp);
    trp->add_option("--u", uStr);
    trp->add_option("--w", wStr);
    trp->add_option("--v", vStr)->required();

    CLI::App* sw = app.add_subcommand("subwords", "classify the subwords of a word");
    addCommon(sw);
    sw->add_option("--word", wordStr)->required();
    sw->add_option("--u", uStr);
    sw->add_option("--v", vStr);
    sw->add_flag("--list", listFlag);

    CLI::App* smc = app.add_subcommand("smc", "restriction of a Segre motivic class");
    addCommon(smc);
    smc->add_option("--u", uStr);
    smc->add_option("--w", wStr);
    smc->add_flag("--times-prefactor", timesPrefactor);
    smc->add_option("--limit-chamber", chamberStr);
    smc->add_flag("--json", jsonOut);

    CLI::App* ajs = app.add_subcommand("ajs-billey", "root-polynomial localization");
    addCommon(ajs);
    ajs->add_option("--u", uStr);
    ajs->add_option("--w", wStr);

    CLI::App* lim = app.add_subcommand("limit", "chamber limit of the prefactored restriction");
    addCommon(lim);
    lim->add_option("--u", uStr);
    lim->add_option("--w", wStr);
    lim->add_option("--v", vStr);

    CLI::App* ric = app.add_subcommand("richardson", "projected Richardson restriction table");
    addCommon(ric);
    ric->add_option("--lambda", lamStr)->required();
    ric->add_option("--u", uStr);
    ric->add_option("--w", wStr);
    ric->add_flag("--json", jsonOut);

    CLI::App* vm = app.add_subcommand("verify-main", "finite/affine restriction comparison");
    addCommon(vm);
    vm->add_option("--lambda", lamStr)->required();
    vm->add_option("--u", uStr);
    vm->add_option("--w", wStr);
    vm->add_flag("--all", all);
    vm->add_flag("--json", jsonOut);

    CLI::App* pd = app.add_subcommand("pipedream", "periodic pipe dreams of a bounded window");
    pd->add_option("--n", nOpt)->required();
    pd->add_option("--k", kOpt)->required();
    pd->add_option("--f", fStr)->required();
    pd->add_flag("--count", pdCount);
    pd->add_flag("--gtilde", pdGtilde);
    pd->add_flag("--verify", pdVerify);
    pd->add_flag("--ascii", pdAscii);
    pd->add_flag("--json", jsonOut);
    pd->add_option("--threads", s.threads);

    CLI::App* st = app.add_subcommand("selftest", "run the full verification battery");
    st->add_option("--seed", seed);
    st->add_option("--only", onlyId);
    st->add_option("--threads", s.threads);

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    s.applyThreads();
    try {
        if (rp->parsed()) return runRPoly(s, uStr, wStr, "", format, rpAll, out);
        if (trp->parsed()) return runRPoly(s, uStr, wStr, vStr, format, false, out);
        if (sw->parsed()) return runSubwords(s, wordStr, uStr, vStr, format, listFlag, out);
        if (smc->parsed()) return runSmc(s, uStr, wStr, timesPrefactor, chamberStr, jsonOut, out);
        if (ajs->parsed()) return runAjs(s, uStr, wStr, out);
        if (lim->parsed()) return runLimit(s, uStr, wStr, vStr, out);
        if (ric->parsed()) return runRichardson(s, lamStr, uStr, wStr, jsonOut, out);
        if (vm->parsed()) return runVerifyMain(s, lamStr, uStr, wStr, all, jsonOut, out);
        if (pd->parsed())
            return runPipedream(nOpt, kOpt, fStr, pdCount, pdGtilde, pdVerify, pdAscii, jsonOut,
                                out);
        if (st->parsed()) {
            auto results = runAcceptance(seed, onlyId);
            bool pass = true;
            for (const auto& r : results) {
                out << formatCriterion(r) << "\n";
                pass = pass && r.pass;
            }
            return pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace mcloc
