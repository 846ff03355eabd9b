/*
 * Copyright 2026 The er2rel Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "er2rel/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace er2rel {

namespace {

// Sources are in canonical format_model() form.
constexpr std::array<Fixture, 8> kFixtures = {{
    {1, "fig1", StepKind::GOG,
     "1:1 relationship type between two regular entity types",
     R"(entity Project {
  key ProNo;
  Name;
  Description;
  Duration;
}

entity Employee {
  key EmpNo;
  Name;
  Address;
  Salary;
}

relationship Assigned (Employee[1,1], Project[0,1]) {
  Date;
}
)",
     "Employee",
     "Employee[EmpNo, Name, Address, Salary, ProNo(Assigned, 1, 0, 1), Date]"},

    {2, "fig2", StepKind::GMG,
     "M:N relationship type between two regular entity types",
     R"(entity Employee {
  key EmpNo;
  Name;
  Address;
  Salary;
}

entity Project {
  key ProNo;
  Name;
  Description;
  Duration;
}

relationship WorkOn (Employee[1,4], Project[2,5]) {
  Hours;
}
)",
     "WorkOn", "WorkOn[EmpNo(1, 4), ProNo(2, 5), Hours]"},

    {3, "fig3", StepKind::SNG,
     "1:N relationship type between a subtype and a regular entity type",
     R"(entity Employee {
  key EmpNo;
  Name;
  Address;
  Salary;
}

entity Project {
  key ProNo;
  Name;
  Location;
}

subtype Supervisor of Employee {}

relationship Supervise (Supervisor[1,1], Project[1,2]) {
  StartDate;
}
)",
     "Supervisor", "Supervisor[EmpNo, ProNo(Supervise, 1, 1, 2), StartDate]"},

    {4, "fig4", StepKind::SMG,
     "M:N relationship type between a subtype and a regular entity type",
     R"(entity Employee {
  key EmpNo;
  Name;
  Address;
  Salary;
}

entity Project {
  key ProNo;
  Name;
  Location;
}

subtype Engineer of Employee {}

relationship Consult (Engineer[2,4], Project[1,n]) {
  Description;
  Date;
}
)",
     "Consult",
     "Consult[Engineer~EmpNo(2, 4), ProNo(1, n), Description, Date]"},

    {5, "fig5", StepKind::SOS, "1:1 relationship type between two subtypes",
     R"(entity Volunteer {
  key VolNo;
  Name;
}

entity Project {
  key ProNo;
  Name;
  Location;
}

subtype Doctor of Volunteer {
  AreaSpecialised;
}

subtype HealthCare of Project {}

relationship Consult (Doctor[1,1], HealthCare[1,1]) {
  Date;
  Hours;
}
)",
     "Doctor",
     "Doctor[VolNo, AreaSpecialised, HealthCare~ProNo(Consult, 1, 1, 1), Date, "
     "Hours]"},

    {6, "fig6", StepKind::SNS, "1:N relationship type between two subtypes",
     R"(entity Volunteer {
  key VolNo;
  Name;
}

entity Project {
  key ProNo;
  Name;
  Location;
}

subtype Doctor of Volunteer {}

subtype DisasterAwareness of Project {
  DisasterType;
}

subtype HealthCare of Project {}

relationship Consult (HealthCare[1,1], Doctor[1,2]) {
  Date;
  Hours;
}
)",
     "HealthCare", "HealthCare[ProNo, Doctor~VolNo(Consult, 1, 1, 2), Date, Hours]"},

    {7, "fig7", StepKind::SMS, "M:N relationship type between two subtypes",
     R"(entity Employee {
  key EmpNo;
  Name;
  Address;
  Salary;
}

entity Project {
  key ProNo;
  Name;
  Location;
}

subtype Laborer of Employee {}

subtype Construction of Project {
  Type;
}

relationship Consult (Laborer[1,3], Construction[1,n]) {
  Date;
  WorkDone;
  Hours;
}
)",
     "Consult",
     "Consult[Laborer~EmpNo(1, 3), Construction~ProNo(1, n), Date, WorkDone, "
     "Hours]"},

    {8, "fig8", StepKind::THG,
     "Ternary relationship type among regular entity types",
     R"(entity Supplier {
  key SupNo;
  Name;
  Address;
}

entity Part {
  key ParNo;
  Description;
  Price;
}

entity Project {
  key ProNo;
  Name;
  Location;
}

relationship Supply (Supplier[2,n], Part[1,n], Project[0,6]) {
  Quantity;
}
)",
     "Supply", "Supply[SupNo(2, n), ParNo(1, n), ProNo(0, 6), Quantity]"},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::span<const Fixture> fixtures() { return kFixtures; }

const Fixture* find_fixture(std::string_view key) {
  for (const auto& f : kFixtures) {
    if (f.id == key || std::to_string(f.figure) == key ||
        iequals(to_string(f.step), key)) {
      return &f;
    }
  }
  return nullptr;
}

}  // namespace er2rel
