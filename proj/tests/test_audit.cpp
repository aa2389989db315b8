#include <doctest.h>

#include "crossnum/audit.hpp"
#include "crossnum/pancake.hpp"

using namespace crossnum;

namespace {

const AuditEntry *find(const AuditReport &r, char id) {
  for (const AuditEntry &e : r.entries)
    if (e.id == id)
      return &e;
  return nullptr;
}

} // namespace

TEST_CASE("fast audit chain passes and is deterministic") {
  const AuditReport a = run_audit_suite();
  REQUIRE(a.entries.size() == 8);
  for (const AuditEntry &e : a.entries) {
    CAPTURE(e.id);
    CAPTURE(e.detail);
    CHECK(e.status == AuditStatus::Pass);
  }
  CHECK(a.all_passed());
  CHECK_FALSE(a.any_failed());
  CHECK(find(a, 'i') == nullptr);
  const AuditReport b = run_audit_suite();
  CHECK(a.human() == b.human());
  CHECK(a.machine() == b.machine());
  CHECK(a.machine().starts_with("audit a pass "));
}

TEST_CASE("a mutated gadget fails the homeomorphism audit") {
  Graph mutated = g12_reference();
  mutated.remove_edge(1, 6);
  mutated.add_edge(1, 7);
  AuditOptions opt;
  opt.gadget_override = mutated;
  const AuditReport r = run_audit_suite(opt);
  const AuditEntry *c = find(r, 'c');
  REQUIRE(c != nullptr);
  CHECK(c->status == AuditStatus::Fail);
  CHECK(r.any_failed());
  CHECK(r.machine().find("audit c fail") != std::string::npos);
  // Checks that do not involve the gadget are unaffected.
  CHECK(find(r, 'a')->status == AuditStatus::Pass);
  CHECK(find(r, 'b')->status == AuditStatus::Pass);
  CHECK(find(r, 'd')->status == AuditStatus::Pass);
}

TEST_CASE("full level reports a sound bracket on timeout") {
  AuditOptions opt;
  opt.level = AuditLevel::Full;
  opt.budget = Seconds(2.0);
  const AuditReport r = run_audit_suite(opt);
  const AuditEntry *i = find(r, 'i');
  REQUIRE(i != nullptr);
  CHECK(i->status != AuditStatus::Fail);
  if (i->status == AuditStatus::Timeout)
    CHECK(i->detail.find("bracket=[5,6]") != std::string::npos);
}
