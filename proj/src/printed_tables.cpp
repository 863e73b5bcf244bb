#include "lowindex/printed_tables.hpp"

#include <cctype>
#include <utility>

namespace lowindex {

namespace {

ElementClaim refl(std::string w) { return {std::move(w), IsometryKind::Reflection, {}}; }
ElementClaim glide(std::string w) { return {std::move(w), IsometryKind::Glide, {}}; }
ElementClaim cusp(std::string w) { return {std::move(w), IsometryKind::Parabolic, {}}; }
ElementClaim transl(std::string w) { return {std::move(w), IsometryKind::Hyperbolic, {}}; }
ElementClaim rot(std::string w, int k) {
  return {std::move(w), IsometryKind::Rotation, ConeOrder::concrete(k)};
}
// Rotation of order p/divisor.
ElementClaim rotp(std::string w, int divisor) {
  return {std::move(w), IsometryKind::Rotation, ConeOrder::p_over(divisor)};
}

void set_prose_orbifolds(std::vector<PrintedRow>& t,
                         const std::vector<std::pair<int, std::string>>& symbols) {
  for (const auto& [row, symbol] : symbols) t.at(row - 1).prose_orbifold = symbol;
}

std::vector<PrintedRow> table1() {
  std::vector<PrintedRow> t = {
      {1, 1, 2, {"(12)", "(12)", "(12)"}, {}, "QR, RP, QP", R"($\Delta \cup Q(\Delta)$)", R"($2p^\infty$)",
       {rotp("QR", 1), rot("RP", 2), cusp("QP")}},
      {1, 2, 2, {"(12)", "(1)", "(1)"}, {}, "R, Q, PQP", R"($\Delta \cup P(\Delta)$)", R"($*pp^\infty$)",
       {refl("Q"), refl("R"), refl("PQP"), rotp("QR", 1), rotp("PQRP", 1), cusp("(QP)^2")}},
      {1, 3, 2, {"(1)", "(12)", "(1)"}, {}, "P, R, QRQ, QPQ", R"($\Delta \cup Q(\Delta)$)", R"($*(p/2)^\infty$)", {}},
      {1, 4, 2, {"(1)", "(1)", "(12)"}, {}, "RQR, P, Q", R"($\Delta \cup R(\Delta)$)", R"($*22(p/2)^\infty$)", {}},
      {1, 5, 2, {"(1)", "(12)", "(12)"}, {}, "RQ, P", R"($\Delta \cup R(\Delta)$)", "p^∞",
       {refl("P"), rotp("QR", 1)}},
      {1, 6, 2, {"(12)", "(1)", "(12)"}, {}, "RP, Q, PQP", R"($\Delta \cup P(\Delta)$)", R"($\infty*(p/2)$)", {}},
      {1, 7, 2, {"(12)", "(12)", "(1)"}, {}, "QP, R, QRQ", R"($\Delta \cup Q(\Delta)$)", R"($2*(p/2)^\infty$)", {}},
      {1, 8, 3, {"(13)", "(12)", "(13)"}, {}, "RP, QPQ, QRQ, RQR", R"($\Delta \cup Q(\Delta) \cup R(\Delta)$)",
       R"($2^*2(p/3)^\infty$)",
       {refl("QPQ"), refl("QRQ"), refl("RQR"), rot("RP", 2), rotp("(QR)^3", 3), rot("QRPQ", 2),
        cusp("(QP)^3")}},
      {1, 9, 3, {"(1)", "(12)", "(13)"}, {}, "QRQ, RQR, P, QPQ", R"($\Delta \cup Q(\Delta) \cup R(\Delta)$)",
       R"($*2(p/3)^\infty$)",
       {refl("QRQ"), refl("RQR"), refl("P"), refl("QPQ"), rotp("(QR)^3", 3), cusp("RPQR"), cusp("(PQ)^2"),
        rot("QRPQ", 2)}},
      {1, 10, 3, {"(12)", "(13)", "(1)"}, {}, "PQP, QPQ, QRQ, R", R"($\Delta \cup P(\Delta) \cup Q(\Delta)$)",
       R"($*2(p/2)p^\infty$)", {}},
      {1, 11, 4, {"(24)", "(12)", "(13)"}, {}, "$P, QPQPQ, QRQ, RQR$",
       R"($\Delta \cup R(\Delta) \cup Q(\Delta) \cup QP(\Delta)$)", R"($*p(p/3)^\infty$)",
       {refl("P"), refl("QPQPQ"), refl("QRQ"), refl("RQR"), rotp("(QR)^3", 3), cusp("(PQ)^3"),
        rotp("QPQRQPQ", 1), cusp("RQPR")}},
      {1, 12, 4, {"(12)", "(13)", "(12)(34)"}, {}, "$RP, RQR, QRQRQ, QPQ$",
       R"($\Delta \cup Q(\Delta) \cup R(\Delta) \cup QR(\Delta)$)", R"($2^*(p/4)^\infty$)",
       {refl("RQR"), refl("QRQRQ"), refl("QPQ"), rot("RP", 2), rotp("(QR)^4", 4), cusp("QRPQRQ"),
        cusp("(PQ)^3")}},
      {1, 13, 4, {"(13)(24)", "(12)", "(13)"}, {}, "$RP, PQP, QPQPQ, QRQ$",
       R"($\Delta \cup Q(\Delta) \cup P(\Delta) \cup QP(\Delta)$)", R"($2^*p(p/3)^\infty$)", {}},
      {1, 14, 4, {"(1)", "(12)", "(13)(24)"}, {}, "$QRQRQ, RQR, P, QPQ$",
       R"($\Delta \cup Q(\Delta) \cup R(\Delta) \cup QR(\Delta)$)", R"($*(p/4)^\infty$)", {}},
      {1, 15, 4, {"(12)", "(13)(24)", "(1)"}, {}, "$PQPQP, QPQ, QRQ, R, PQRQP$",
       R"($\Delta \cup P(\Delta) \cup Q(\Delta) \cup PQ(\Delta)$)", R"($*\infty 2(p/2)(p/2)2$)", {}},
      {1, 16, 4, {"(1)", "(13)(24)", "(12)"}, {}, "$RQRQR, QRQ, QPQ, P, RQPQR$",
       R"($\Delta \cup R(\Delta) \cup Q(\Delta) \cup RQ(\Delta)$)", R"($*2(p/4)2^\infty$)", {}},
      {1, 17, 4, {"(13)(24)", "(12)", "(1)"}, {}, "$QPQPQ, PQP, R, QRQ$",
       R"($\Delta \cup Q(\Delta) \cup P(\Delta) \cup QP(\Delta)$)", R"($*p(p/2)^\infty$)", {}},
      {1, 18, 4, {"(12)", "(13)(24)", "(12)"}, {}, "$RP, QRQ, QPQ, PQPQP, PQRQP$",
       R"($\Delta \cup P(\Delta) \cup Q(\Delta) \cup PQ(\Delta)$)", R"($2^*2(p/4)2^\infty$)", {}},
      {1, 19, 4, {"(34)", "(13)(24)", "(12)"}, {}, "$P, QRQ, RQPQ$",
       R"($\Delta \cup Q(\Delta) \cup R(\Delta) \cup QP(\Delta)$)", R"($*\infty*(p/4)$)",
       {refl("P"), refl("QRQ"), transl("RQPQ"), cusp("(PQ)^4"), rotp("(QR)^4", 4)}},
      {1, 20, 4, {"(12)", "(13)(24)", "(12)(34)"}, {}, "$QRQR, RP, QPQ, QRPRQ$",
       R"($\Delta \cup Q(\Delta) \cup R(\Delta) \cup QR(\Delta)$)", R"($(p/2)2^*\infty$)",
       {refl("QPQ"), refl("QRPRQ"), rot("RP", 2), rotp("(QR)^2", 2), cusp("(QP)^4")}},
      {1, 21, 4, {"(12)(34)", "(12)", "(13)(24)"}, {}, "$PQ, RQR, RPQPR$",
       R"($\Delta \cup R(\Delta) \cup P(\Delta) \cup RP(\Delta)$)", R"($\infty*(p/4)^\infty$)", {}},
      {1, 22, 4, {"(13)(24)", "(12)", "(12)(34)"}, {}, "$QR, PQP, PRQRP$",
       R"($\Delta \cup P(\Delta) \cup R(\Delta) \cup PR(\Delta)$)", R"($p^*(p/2)^\infty$)", {}},
      {1, 23, 4, {"(12)(34)", "(13)(24)", "(12)"}, {}, "$PQPQ, RP, QRQ$",
       R"($\Delta \cup Q(\Delta) \cup P(\Delta) \cup QP(\Delta)$)", R"($2\infty*(p/4)$)", {}},
      {1, 24, 4, {"(13)(24)", "(12)", "(13)(24)"}, {}, "$RP, QRQP, QPQPQ, PQP$",
       R"($\Delta \cup Q(\Delta) \cup P(\Delta) \cup QP(\Delta)$)", R"($22^*(p/4)^\infty$)", {}},
      {1, 25, 4, {"(14)(23)", "(12)", "(13)(24)"}, {}, "RQR, PQP, QRP",
       R"($\Delta \cup P(\Delta) \cup R(\Delta) \cup PR(\Delta)$)", R"($*(p/4)^\infty$)",
       {refl("RQR"), refl("PQP"), glide("QPR"), rotp("(QR)^4", 4), cusp("(PQ)^4")}},
      {1, 26, 4, {"(12)(34)", "(13)(24)", "(14)(23)"}, {}, "PQR, PRQ, QPR",
       R"($\Delta \cup P(\Delta) \cup Q(\Delta) \cup R(\Delta)$)", R"($(p/2)^\infty$)",
       {glide("PQR"), glide("PRQ"), glide("QPR"), rotp("(QR)^2", 2), cusp("(PQ)^2")}},
      {1, 27, 4, {"(1)", "(12)(34)", "(13)(24)"}, {}, "$QRQR, P, QPQ$",
       R"($\Delta \cup Q(\Delta) \cup R(\Delta) \cup QR(\Delta)$)", R"($(p/2)^*\infty$)", {}},
      {1, 28, 4, {"(13)(24)", "(1)", "(12)(34)"}, {}, "$RQR, Q, PQP, PRQRP$",
       R"($\Delta \cup P(\Delta) \cup R(\Delta) \cup PR(\Delta)$)", R"($*p(p/2)^\infty$)", {}},
      {1, 29, 4, {"(12)(34)", "(13)(24)", "(1)"}, {}, "$PQPQ, QRQ, R, PQRQP$",
       R"($\Delta \cup P(\Delta) \cup Q(\Delta) \cup PQ(\Delta)$)", R"($\infty*(p/2)(p/2)$)", {}},
      {1, 30, 4, {"(13)(24)", "(12)(34)", "(12)(34)"}, {}, "$QR, PQR, PQPQ$",
       R"($\Delta \cup P(\Delta) \cup Q(\Delta) \cup PQ(\Delta)$)", "pp^∞",
       {rotp("QR", 1), rotp("PQRP", 1), cusp("(PQ)^2")}},
      {1, 31, 4, {"(12)(34)", "(13)(24)", "(12)(34)"}, {}, "$RP, QRQP, PQPQ$",
       R"($\Delta \cup Q(\Delta) \cup P(\Delta) \cup QP(\Delta)$)", R"($2(p/2)2^\infty$)", {}},
      {1, 32, 4, {"(12)(34)", "(12)(34)", "(13)(24)"}, {}, "$PQ, RPQR$",
       R"($\Delta \cup R(\Delta) \cup P(\Delta) \cup RP(\Delta)$)", R"($(p/2)^\infty$)", {}},
  };
  set_prose_orbifolds(t, {{1, R"($p2\infty$)"},
                          {2, R"($*pp\infty$)"},
                          {5, R"($p*\infty$)"},
                          {8, R"($2*2(p/3)\infty$)"},
                          {9, R"($*2(p/3)\infty\infty$)"},
                          {11, R"($*p(p/3)\infty\infty$)"},
                          {12, R"($2*(p/4)\infty\infty$)"},
                          {19, R"($*\infty*(p/4)$)"},
                          {20, R"($(p/2)2^*\infty$)"},
                          {25, R"($*(p/4)\infty x$)"},
                          {26, R"($(p/2)\infty x$)"},
                          {30, R"($pp\infty$)"}});
  return t;
}

std::vector<PrintedRow> table2() {
  std::vector<PrintedRow> t = {
      {2, 1, 2, {"(1)", "(12)"}, {"(12)"}, "QR, PQR, PQP", R"($\Delta' \cup PQ(\Delta)$)", R"($pp\infty$)", {}},
      {2, 2, 2, {"(12)", "(1)"}, {"(12)"}, "RP, QRQ, PQP", R"($\Delta' \cup QP(\Delta)$)", R"($22(p/2)\infty$)", {}},
      {2, 3, 2, {"(12)", "(12)"}, {"(1)"}, "PQ, RPQ", R"($\Delta' \cup RQ(\Delta)$)", R"($(p/2)\infty\infty$)", {}},
      {2, 4, 3, {"(123)", "(1)"}, {"(123)"}, "$RP, QRQ, PQRQP, QPQP$",
       R"($\Delta' \cup PQ(\Delta) \cup QP(\Delta)$)", R"($(p/3)222\infty$)",
       {rot("RP", 2), rot("QRPQ", 2), rot("PQRQPQ", 2), cusp("(QP)^3"), rotp("QP(QR)^3PQ", 3)}},
      {2, 5, 3, {"(12)", "(23)"}, {"(123)"}, "$RP, QRQ, PQPQP$",
       R"($\Delta' \cup QP(\Delta) \cup PQ(\Delta)$)", R"($(p/2)2\infty\infty$)",
       {rot("RP", 2), cusp("QRQP"), cusp("(QP)^3"), rotp("(QR)^2", 2)}},
      {2, 6, 3, {"(123)", "(13)"}, {"(23)"}, "$QP, RQPQP, RQRQP$",
       R"($\Delta' \cup RQ(\Delta) \cup QR(\Delta)$)", R"($2(p/3)\infty\infty$)", {}},
      {2, 7, 4, {"(12)(34)", "(13)(24)"}, {"(14)(23)"}, "$QPQP, RQRQ, PRQRQP$",
       R"($\Delta' \cup PQ(\Delta) \cup RQ(\Delta) \cup RP(\Delta)$)", R"($(p/2)(p/2)\infty$)",
       {cusp("(QP)^2"), rotp("(RQ)^2", 2), rotp("P(RQ)^2P", 2)}},
      {2, 8, 4, {"(1234)", "(1)"}, {"(1234)"}, "$RP, QRQ, PQRQP, QPQPQP, QPQRQP$",
       R"($\Delta' \cup PQ(\Delta) \cup QP(\Delta) \cup (PQ)^2(\Delta)$)", R"($222(p/4)\infty\infty$)",
       {rot("RP", 2), rot("QRPQ", 2), rot("PQRQPQ", 2), cusp("(QP)^4"), cusp("QPQRQPQP"),
        rotp("P(RQ)^4P", 4)}},
      {2, 9, 4, {"(1234)", "(13)(24)"}, {"(1432)"}, "$QRQP, RQPQ, PRQPQP$",
       R"($\Delta' \cup PQ(\Delta) \cup RQ(\Delta) \cup RP(\Delta)$)", R"($(p/4)\infty\infty\infty$)",
       {cusp("QRQP"), cusp("RQPQ"), cusp("PRQPQP"), rotp("P(RQ)^4P", 4)}},
      {2, 10, 4, {"(12)(34)", "(23)"}, {"(1243)"}, "$RP, QRQ, PQPQPQP, QPQRQP$",
       R"($\Delta' \cup PQ(\Delta) \cup QP(\Delta) \cup (PQ)^2(\Delta)$)", R"($2(p/2)\infty\infty\infty$)",
       {rot("RP", 2), cusp("QRQP"), cusp("(QP)^4"), cusp("QPQRQPQP"), rotp("(QR)^2", 2)}},
      {2, 11, 4, {"(1234)", "(24)"}, {"(12)(34)"}, "$RP, QPQP, QRQPQP, QRQRQP$",
       R"($\Delta' \cup QR(\Delta) \cup RQ(\Delta) \cup (RQ)^2(\Delta')$)", R"($2(p/4)\infty\infty\infty$)",
       {rot("RP", 2), cusp("(QP)^2"), cusp("QRQPQRQP"), cusp("QRQRQRQP"), rotp("(QR)^4", 4)}},
      {2, 12, 4, {"(1243)", "(13)(24)"}, {"(23)"}, "$QP, RQPQP, RQRQRQP$",
       R"($\Delta' \cup QR(\Delta) \cup RQ(\Delta) \cup (PQ)^2(\Delta')$)", R"($(p/4)p\infty\infty\infty$)", {}},
      {2, 13, 4, {"(23)", "(12)(34)"}, {"(1342)"}, "$RQ, PRQRQP, PQRQPQP$",
       R"($\Delta' \cup PQ(\Delta) \cup QP(\Delta) \cup (PQ)^2(\Delta')$)", R"($(p/2)p\infty\infty\infty$)", {}},
      {2, 14, 4, {"(123)", "(13)(24)"}, {"(243)"}, "$QP, RQRQP, RQPQRQP$",
       R"($\Delta' \cup PQ(\Delta) \cup QP(\Delta) \cup (PQ)^2(\Delta')$)", R"($(p/3)\infty\infty\infty\infty$)",
       {rot("RQRPQR", 2), rot("PRQRPQR", 2), cusp("RQPQPQR"), cusp("QP")}},
      {2, 15, 4, {"(123)", "(24)"}, {"(1243)"}, "$RP, QRQ, PQRQP, PQRQPQP$",
       R"($\Delta' \cup PQ(\Delta) \cup QP(\Delta) \cup (PQ)^2(\Delta')$)", R"($22(p/3)p\infty$)",
       {rot("RP", 2), rot("QR", 2), rotp("PQPRQPQP", 1), cusp("QPQRQP"), rotp("(RQ)^3", 3)}},
      {2, 16, 4, {"(1234)", "(14)"}, {"(234)"}, "$QP, RQRQP, PRQRQP, RQPQPQP$",
       R"($\Delta' \cup PQ(\Delta) \cup QP(\Delta) \cup (PQ)^2(\Delta')$)", R"($22(p/4)\infty\infty$)", {}},
  };
  set_prose_orbifolds(t, {{4, R"($(p/3)222^\infty$)"},
                          {5, R"($2(p/2)^\infty$)"},
                          {7, R"($(p/2)(p/2)^\infty$)"},
                          {8, R"($222(p/4)^\infty$)"},
                          {9, R"($(p/4)^\infty$)"},
                          {10, R"($2(p/2)^\infty$)"},
                          {11, R"($2(p/4)^\infty$)"},
                          {14, "22^\xE2\x88\x9E"},
                          {15, R"($22(p/3)p^\infty$)"}});
  return t;
}

std::vector<PrintedRow> table3() {
  std::vector<PrintedRow> t = {
      {3, 1, 2, {"(1)", "(1)", "(12)", "(1)"}, {"(1)", "(12)", "(1)", "(1)"},
       "$PS', P'Q'P'R'Q'P', P'Q'P'Q'R'Q'P'Q'$", "", "", {}},
      {3, 2, 2, {"(12)", "(12)", "(1)", "(12)"}, {"(1)", "(12)", "(1)", "(1)"},
       "$RS', P'Q'P'Q', Q'R'P'Q'S'P'$", "", "", {}},
      {3, 3, 2, {"(12)", "(12)", "(12)", "(12)"}, {"(1)", "(1)", "(1)", "(1)"},
       "$SR', Q'P'Q'R', Q'R'P'Q'RP'$", "", "", {}},
      {3, 4, 3, {"(23)", "(12)", "(1)", "(23)"}, {"(132)", "(12)", "(123)", "(1)"},
       "$RP', Q'P'Q'P', Q'R'P'Q', SR'Q'R'P'Q'SP', PS'Q'R'P'Q'SP'Q'R'P'Q'SP'$", "", "", {}},
      {3, 5, 3, {"(23)", "(12)", "(12)", "(23)"}, {"(132)", "(1)", "(123)", "(1)"},
       "$RP', Q'R'P'Q', Q'P'S'Q', SR'SP'RS', SR'Q'P'Q'FRS', PS'Q'R'P'Q'RS', SR'Q'R'P'Q'SP', "
       "PS'Q'R'Q'P'Q'R'P'Q'SP', PS'Q'R'P'Q'SP'Q'R'P'Q'SP'$",
       "", "", {}},
      {3, 6, 4, {"(12)(34)", "(12)(34)", "(13)(24)", "(12)(34)"}, {"(1)", "(14)(23)", "(1)", "(1)"},
       "$RS', Q'R'Q'S', Q'R'P'Q'SP', S'Q'P'R'Q'P', S'Q'P'Q'R'Q'P'Q'$", "", "", {}},
      {3, 7, 4, {"(34)", "(23)", "(1)", "(12)"}, {"(123)", "(23)", "(234)", "(12)(34)"},
       "$RP', SP', Q'P'Q'P', Q'R'Q'P'Q'R'P'Q', Q'R'Q'SP'Q'R'P'Q', Q'R'P'Q'R'P'Q'P'Q', "
       "Q'R'P'Q'SR'Q'P'Q'RS'P'Q'R'P'Q', Q'R'P'Q'SR'Q'P'Q'RS'Q'R'P'Q', "
       "Q'R'P'Q'S'Q'R'P'Q'P'Q'S'Q'R'P'Q', Q'R'P'Q'S'Q'R'P'Q'P'Q'S'Q'R'P'Q', "
       "Q'R'P'Q'S'Q'R'P'Q'P'Q'S'Q'R'P'Q'$",
       "", "", {}},
      {3, 8, 4, {"(34)", "(23)", "(23)", "(12)"}, {"(123)", "(1)", "(234)", "(12)(34)"},
       "$RP', SP', Q'P'Q'P', Q'R'Q'P'Q'Q', Q'R'P'Q'P'Q'P'Q', Q'R'P'Q'SR'Q'P'Q'RS'Q'R'P'Q', "
       "Q'R'P'Q'S'Q'R'P'Q'P'Q'S'Q'R'P'Q', Q'R'P'Q'S'Q'R'P'Q'P'Q'S'Q'R'P'Q'$",
       "", "", {}},
      {3, 9, 4, {"(34)", "(23)", "(14)", "(34)"}, {"(243)", "(14)(23)", "(234)", "(1)"},
       "$RP', SP', QR'QP', P'Q'P'Q'S'Q'P'Q', P'Q'R'Q'P'SR'Q'R'Q'P', P'Q'R'Q'P'S'Q'P'Q'S'Q'R'Q'P', "
       "P'Q'R'Q'P'S'Q'P'Q'S'Q'R'Q'P', P'Q'R'Q'P'P'Q'Q'P', P'Q'P'Q'R'Q'P'Q'$",
       "", "", {}},
      {3, 10, 4, {"(34)", "(23)", "(14)", "(12)"}, {"(123)", "(14)(23)", "(234)", "(12)(34)"},
       "$RP', SP', Q'P'Q'SR'Q'P'Q', Q'P'Q'R'Q'P'Q'Q'P'Q', Q'P'Q'R'Q'P'P'Q'Q'P'Q', P'Q'P'Q'S'Q'P'Q', "
       "P'Q'P'Q'S'Q'P'Q', P'Q'R'Q'P'Q'P'Q', Q'P'Q'R'P'Q'P'Q'P'Q', P'Q'P'Q'S'Q'P'Q', Q'P'Q'R'P'Q'Q'P'Q'$",
       "", "", {}},
      {3, 11, 4, {"(34)", "(23)", "(14)(23)", "(34)"}, {"(243)", "(14)", "(234)", "(1)"},
       "$RP', SP', QR'QP', Q'P'Q'R'Q'P'Q', P'Q'R'Q'P'SR'Q'R'Q'P', P'Q'R'Q'P'SR'Q'P'Q', P'Q'R'P'SR'Q'P', "
       "P'Q'R'Q'P'S'Q'P'Q'S'Q'R'Q'P'$",
       "", "", {}},
      {3, 12, 4, {"(34)", "(23)", "(14)(23)", "(12)"}, {"(123)", "(14)", "(234)", "(12)(34)"},
       "$RP', SP', P'Q'P'Q'P', P'Q'P'Q'S'Q'P'Q', Q'R'Q'R'Q'P'Q', Q'P'Q'R'Q'P'P'Q'Q'P'Q', "
       "Q'P'Q'RS'Q'P'Q'R'Q'P'Q', P'Q'R'Q'P'Q'P'Q'Q'P'Q'$",
       "", "", {}},
  };
  return t;
}

bool starts_with(std::string_view s, std::size_t i, std::string_view what) {
  return s.substr(i, what.size()) == what;
}

}  // namespace

const std::vector<PrintedRow>& printed_table(int id) {
  static const std::vector<PrintedRow> t1 = table1();
  static const std::vector<PrintedRow> t2 = table2();
  static const std::vector<PrintedRow> t3 = table3();
  switch (id) {
    case 1:
      return t1;
    case 2:
      return t2;
    case 3:
      return t3;
  }
  throw UsageError("no table " + std::to_string(id));
}

Family table_family(int id) {
  switch (id) {
    case 1:
      return Family::ExtendedHecke;
    case 2:
      return Family::Hecke;
    case 3:
      return Family::Picard;
  }
  throw UsageError("no table " + std::to_string(id));
}

std::vector<std::string> assignment_columns(int id) {
  switch (id) {
    case 1:
      return {"P", "Q", "R"};
    case 2:
      return {"QR", "RP"};
    case 3:
      return {"g1", "g2", "g3", "g4"};
  }
  throw UsageError("no table " + std::to_string(id));
}

std::vector<std::string> derived_columns(int id) {
  switch (id) {
    case 1:
      return {};
    case 2:
      return {"QP"};
    case 3:
      return {"Q'R'Q'S'", "S'Q'P'Q'", "S'R'", "Q'R'Q'R'"};
  }
  throw UsageError("no table " + std::to_string(id));
}

std::string normalize_orbifold(std::string_view raw) {
  std::string out;
  for (std::size_t i = 0; i < raw.size();) {
    if (raw[i] == '$' || std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
    } else if (starts_with(raw, i, "^\\infty")) {
      out += "\xE2\x88\x9E";
      i += 7;
    } else if (starts_with(raw, i, "\\infty")) {
      out += "\xE2\x88\x9E";
      i += 6;
    } else if (starts_with(raw, i, "^*")) {
      out += '*';
      i += 2;
    } else {
      out += raw[i++];
    }
  }
  return out;
}

std::vector<std::string> split_words(std::string_view raw) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : raw) {
    if (c == '$' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string expand_powers(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') {
      out += text[i++];
      continue;
    }
    int depth = 0;
    std::size_t j = i;
    for (; j < text.size(); ++j) {
      if (text[j] == '(') ++depth;
      if (text[j] == ')' && --depth == 0) break;
    }
    if (j >= text.size()) throw ParseError("unbalanced '('", i);
    const std::string inner = expand_powers(text.substr(i + 1, j - i - 1));
    std::size_t k = j + 1;
    int power = 1;
    if (k < text.size() && text[k] == '^') {
      ++k;
      std::size_t start = k;
      power = 0;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
        power = power * 10 + (text[k++] - '0');
      }
      if (k == start) throw ParseError("expected exponent", start);
    }
    for (int r = 0; r < power; ++r) out += inner;
    i = k;
  }
  return out;
}

std::vector<std::string> region_words(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (c != '$' && !std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t next = s.find("\\cup", i);
    std::string part = s.substr(i, next == std::string::npos ? std::string::npos : next - i);
    if (part == "\\Delta") {
      out.push_back("");
    } else {
      const std::string suffix = "(\\Delta)";
      if (part.size() <= suffix.size() ||
          part.compare(part.size() - suffix.size(), suffix.size(), suffix) != 0) {
        throw ParseError("unrecognized region term '" + part + "'", i);
      }
      out.push_back(expand_powers(part.substr(0, part.size() - suffix.size())));
    }
    if (next == std::string::npos) break;
    i = next + 4;
  }
  return out;
}

}  // namespace lowindex
