#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int rc = -1;
    std::string out;
};

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s)
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

// Runs the installed binary; stderr is folded into stdout only on request so
// JSON outputs stay clean.
CliResult run_cli(const std::vector<std::string>& args, bool merge_stderr = false) {
    std::string cmd = shell_quote(GAG_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(GAG_SOURCE_DIR) + "/schemas/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

bool type_matches(const json& value, const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    return false;
}

// Just enough of JSON Schema for the shapes under schemas/: type (possibly a
// union), enum, required, properties, items.
std::string validate(const json& value, const json& schema, const std::string& at = "$") {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = t.is_array() ? std::any_of(t.begin(), t.end(),
                                             [&](const json& u) {
                                                 return type_matches(value, u.get<std::string>());
                                             })
                               : type_matches(value, t.get<std::string>());
        if (!ok) return at + ": type mismatch (" + t.dump() + ", got " + value.dump() + ")";
    }
    if (schema.contains("enum")) {
        const json& e = schema["enum"];
        if (std::find(e.begin(), e.end(), value) == e.end())
            return at + ": " + value.dump() + " not in " + e.dump();
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!value.contains(k.get<std::string>()))
                    return at + ": missing required key " + k.dump();
        if (schema.contains("properties"))
            for (auto& [k, sub] : schema["properties"].items())
                if (value.contains(k))
                    if (std::string err = validate(value.at(k), sub, at + "." + k); !err.empty())
                        return err;
    }
    if (value.is_array() && schema.contains("items"))
        for (size_t i = 0; i < value.size(); ++i)
            if (std::string err = validate(value[i], schema["items"], at + "[" +
                                           std::to_string(i) + "]");
                !err.empty())
                return err;
    return "";
}

json run_json(const std::vector<std::string>& args, const std::string& schema_name,
              int want_rc = 0) {
    std::vector<std::string> full = args;
    full.push_back("--format");
    full.push_back("json");
    CliResult r = run_cli(full);
    CHECK(r.rc == want_rc);
    json j = json::parse(r.out);
    CHECK(validate(j, load_schema(schema_name)) == "");
    return j;
}

}  // namespace

TEST_CASE("cli parse: shape report in both formats") {
    CliResult r = run_cli({"parse", "-e", "copy ; add"});
    CHECK(r.rc == 0);
    CHECK(r.out == "copy ; add\narity: 1 -> 1\nlanguage: lcalg\n");

    json j = run_json({"parse", "-e", "copy ; add"}, "parse.json");
    CHECK(j["term"] == "copy ; add");
    CHECK(j["arity"]["in"] == 1);
    CHECK(j["arity"]["out"] == 1);
    CHECK(j["language"] == "lcalg");
    CHECK(j["size"] == 2);

    CHECK(run_json({"parse", "-e", "mul'"}, "parse.json")["language"] == "gca");
    CHECK(run_json({"parse", "--field", "3", "-e", "z1 ; del"}, "parse.json")["language"] ==
          "gag-fourier");

    // Language gates and syntax errors.
    CHECK(run_cli({"parse", "--language", "lcalg", "-e", "mul'"}).rc == 2);
    CHECK(run_cli({"parse", "-e", "copy ;"}).rc == 2);
    CHECK(run_cli({"parse", "-e", "add ; add"}).rc == 2);
}

TEST_CASE("cli normalize: canonical relational form") {
    CliResult r = run_cli({"normalize", "--field", "2", "-e", "copy ; add"});
    CHECK(r.rc == 0);
    CHECK(r.out == "r=1; left=[x1]; right=[0]; ideal=[]\n");

    json j = run_json({"normalize", "--field", "2", "-e", "copy ; add"}, "normalize.json");
    CHECK(j["r"] == 1);
    CHECK(j["left"] == json::array({"x1"}));
    CHECK(j["right"] == json::array({"0"}));
    CHECK(j["ideal"] == json::array());
    CHECK(j["order"] == "grevlex");
    CHECK(j["field"] == "2");

    // Over the rationals the field is reported as null; the dependent wire
    // x2 = x1^2 is eliminated, leaving one interior variable.
    json jq = run_json({"normalize", "-e", "ideal[x1^2 - x2]"}, "normalize.json");
    CHECK(jq["field"].is_null());
    CHECK(jq["r"] == 1);
    CHECK(jq["left"] == json::array({"x1", "x1^2"}));

    json jm = run_json({"normalize", "--field", "3", "--with-matrix", "-e", "copy"},
                       "normalize.json");
    CHECK(jm.contains("matrix"));
    CHECK(jm["matrix"]["rows"] == 3);
    CHECK(jm["matrix"]["cols"] == 9);
    CHECK(run_cli({"normalize", "--with-matrix", "-e", "copy"}).rc == 1);

    // Orders are selectable and reflected in the report.
    CHECK(run_json({"normalize", "--order", "lex", "-e", "ideal[x1*x2 - 1, x1^2 - 1]"},
                   "normalize.json")["order"] == "lex");
    CHECK(run_cli({"normalize", "--order", "fancy", "-e", "id"}).rc == 1);
}

TEST_CASE("cli matrix: counting matrices and the enumeration budget") {
    CliResult r = run_cli({"matrix", "--field", "2", "-e", "copy"});
    CHECK(r.rc == 0);
    CHECK(r.out == "[[1, 0, 0, 0], [0, 0, 0, 1]]\n");

    json j = run_json({"matrix", "--field", "3", "-e", "copy"}, "matrix.json");
    CHECK(j["rows"] == 3);
    CHECK(j["cols"] == 9);
    CHECK(j["entries"][1] == json::array({0, 0, 0, 0, 1, 0, 0, 0, 0}));

    CHECK(run_cli({"matrix", "-e", "copy"}).rc == 1);
    CHECK(run_cli({"matrix", "--field", "5", "--max-enum", "10", "-e", "copy"}).rc == 4);
    CliResult err = run_cli({"matrix", "--field", "5", "--max-enum", "10", "-e", "copy"}, true);
    CHECK(err.out.find("GAG_MAX_ENUM") != std::string::npos);
}

TEST_CASE("cli equiv: one exit code per verdict") {
    CHECK(run_cli({"equiv", "--field", "3", "-e", "copy ; add", "sc(2)"}).rc == 0);
    CHECK(run_cli({"equiv", "--field", "2", "-e", "zero", "one"}).rc == 5);
    CHECK(run_cli({"equiv", "-e", "ideal[x1^2]", "ideal[x1]"}).rc == 6);
    CHECK(run_cli({"equiv", "--field", "2", "-e", "copy", "id"}).rc == 3);
    CHECK(run_cli({"equiv", "--field", "2", "-e", "copy ;", "id"}).rc == 2);

    CHECK(run_cli({"equiv", "--field", "3", "-e", "copy ; add", "sc(2)"}).out == "Equal\n");
    CHECK(run_json({"equiv", "--field", "3", "-e", "copy ; add", "sc(2)"}, "equiv.json")["result"]
          == "Equal");
    CHECK(run_json({"equiv", "--field", "2", "-e", "zero", "one"}, "equiv.json", 5)["result"] ==
          "NotEqual");
    CHECK(run_json({"equiv", "-e", "ideal[x1^2]", "ideal[x1]"}, "equiv.json", 6)["result"] ==
          "Unknown");
}

TEST_CASE("cli count: polynomial systems and DIMACS files") {
    std::string sys = "field 3\nvars x\nx^2 + 2*x\n";
    CHECK(run_cli({"count", "-e", sys}).out == "2\n");
    json j = run_json({"count", "-e", sys}, "count.json");
    CHECK(j["count"] == 2);
    CHECK(j["n"] == 1);
    CHECK(j["q"] == 3);
    CHECK(j["method"] == "diagram");

    CHECK(run_json({"count", "-e", "field 3\nvars x, y\n"}, "count.json")["count"] == 9);

    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/gag_cli_test.cnf";
    {
        std::ofstream f(path);
        f << "c two clauses\np cnf 3 2\n1 2 0\n-1 3 0\n";
    }
    json jc = run_json({"count", "--field", "2", path}, "count.json");
    CHECK(jc["count"] == 4);
    CHECK(jc["n"] == 3);
    CHECK(jc["q"] == 2);
    // DIMACS is a GF(2) format: the field must be given and must match.
    CHECK(run_cli({"count", path}).rc == 1);
    CHECK(run_cli({"count", "--field", "3", path}).rc == 3);
    std::remove(path.c_str());

    CHECK(run_cli({"count", "/nonexistent.csp"}).rc == 1);
    CHECK(run_cli({"count", "-e", "field 6\nvars x\nx\n"}).rc == 2);
    CliResult bad = run_cli({"count", "-e", "field 6\nvars x\nx\n"}, true);
    CHECK(bad.out.find("not a prime power") != std::string::npos);
}

TEST_CASE("cli zh-amp: exact scaled amplitude with audited oracle calls") {
    CliResult r = run_cli({"zh-amp", "--field", "3", "-e", "Z(0,0)"});
    CHECK(r.rc == 0);
    CHECK(r.out == "3\noracle calls: 3\n");

    json j = run_json({"zh-amp", "--field", "3", "-e", "Z(0,0)"}, "zh-amp.json");
    CHECK(j["k"] == 0);
    CHECK(j["value"] == json::array({3, 0}));
    CHECK(j["p"] == 3);
    CHECK(j["q"] == 3);
    CHECK(j["oracle_calls"] == 3);
    CHECK(j["text"] == "3");

    json h = run_json({"zh-amp", "--field", "2", "-e", "H(0,0)"}, "zh-amp.json");
    CHECK(h["k"] == -1);
    CHECK(h["value"] == json::array({-1}));
    CHECK(h["text"] == "q^(-1/2) * -1");

    CHECK(run_cli({"zh-amp", "-e", "Z(0,0)"}).rc == 1);          // needs --field
    CHECK(run_cli({"zh-amp", "--field", "2", "-e", "Z(1,1)"}).rc == 3);  // not closed
    CHECK(run_cli({"zh-amp", "--field", "2", "-e", "copy"}).rc == 2);    // not a circuit
}

TEST_CASE("cli rules: catalog listing and soundness sweep") {
    json j = run_json({"rules", "list", "--field", "2"}, "rules-list.json");
    CHECK(j["language"] == "gag-fourier");
    CHECK(j["rules"].size() == 56);
    CHECK(j["rules"][0]["name"] == "z-assoc");

    json small = run_json({"rules", "list", "--language", "lcalg", "--field", "2"},
                          "rules-list.json");
    CHECK(small["language"] == "lcalg");
    CHECK(small["rules"].size() == 41);
    CHECK(small["rules"].size() < j["rules"].size());
    for (const auto& rule : small["rules"])
        CHECK((rule["ruleset"] == "lcalg" || rule["ruleset"] == "scalable"));

    // Without --field the scalar rule families are sampled over the rationals,
    // which has a larger exemplar set than F_2.
    json rts = run_json({"rules", "list", "--language", "lcalg"}, "rules-list.json");
    CHECK(rts["rules"].size() == 95);

    json chk = run_json({"rules", "check", "--q", "2"}, "rules-check.json");
    CHECK(chk["checked"] == 56);
    CHECK(chk["sound"] == true);
    CHECK(chk["failures"] == json::array());
    CHECK(chk["per_q"][0]["q"] == "2");
    CHECK(chk["per_q"][0]["rules"] == 56);
    CHECK(run_cli({"rules", "check", "--q", "2"}).out ==
          "q=2: 56 rules checked\nall rules sound\n");
    // The alias spelled out in full.
    CHECK(run_cli({"rules", "check-soundness", "--q", "2"}).rc == 0);
}

TEST_CASE("cli output is deterministic byte for byte") {
    std::vector<std::vector<std::string>> cases = {
        {"normalize", "--field", "3", "-e", "(copy * id) ; (id * add)", "--format", "json"},
        {"matrix", "--field", "2", "-e", "add ; add'"},
        {"rules", "list", "--field", "2", "--format", "json"},
        {"normalize", "-e", "ideal[x1*x2 - 1, x1^2 - 1]"},
    };
    for (const auto& args : cases) {
        CliResult a = run_cli(args), b = run_cli(args);
        CHECK(a.rc == 0);
        CHECK(a.rc == b.rc);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
    CHECK(run_cli({"nosuch"}).rc == 1);
}
