// Generated once by tools/catalog_extract.py and checked in; edit by hand only to
// fix a transcription, and record every correction as an erratum.

#include "catalog_data.hpp"

namespace lieham::detail {

const std::vector<CatalogSource>& catalog_sources() {
  static const std::vector<CatalogSource> sources{
      {"A_{2,1}",
       "2n_{1,1}",
       "Abelian",
       "dimension 2",
       {
        {"a11", "a12"},
        {"a12", "a22"}},
       {{
         {"0", "f12"},
         {"-f12", "0"}}},
       {},
       {},
       {}},
      {"A_{3,1}",
       "3n_{1,1}",
       "Abelian",
       "dimension 3",
       {
        {"a11", "a12", "a13"},
        {"a12", "a22", "a23"},
        {"a13", "a23", "a33"}},
       {{
         {"0", "f12", "f13"},
         {"-f12", "0", "f23"},
         {"-f13", "-f23", "0"}}},
       {},
       {},
       {}},
      {"A_{3,2}",
       "sl(2,R)",
       "Simple",
       "dimension 3",
       {
        {"0", "0", "alpha"},
        {"0", "(alpha)/(2)", "0"},
        {"alpha", "0", "0"}},
       {{
         {"0", "u1+f12", "-2*u2+f13"},
         {"-u1-f12", "0", "u3+f13"},
         {"2*u2-f13", "-u3-f23", "0"}}},
       {{"omega1", 2, 3, "u3+f13", "u3+f23"}},
       {},
       {{1, 2, {{1, "1"}}}, {1, 3, {{2, "-2"}}}, {2, 3, {{3, "1"}}}}},
      {"A_{3,3}",
       "so(3,R)",
       "Simple",
       "dimension 3",
       {
        {"alpha", "0", "0"},
        {"0", "alpha", "0"},
        {"0", "0", "alpha"}},
       {{
         {"0", "u3+f12", "-u2+f13"},
         {"-u3-f12", "0", "u1+f23"},
         {"u2-f13", "-u1-f23", "0"}}},
       {},
       {},
       {{1, 2, {{3, "1"}}}, {1, 3, {{2, "-1"}}}, {2, 3, {{1, "1"}}}}},
      {"A_{4,1}",
       "4n_{1,1}",
       "Abelian",
       "dimension 4",
       {
        {"a11", "a12", "a13", "a14"},
        {"a12", "a22", "a23", "a24"},
        {"a13", "a23", "a33", "a34"},
        {"a14", "a24", "a34", "a44"}},
       {{
         {"0", "f12", "f13", "f14"},
         {"-f12", "0", "f23", "f24"},
         {"-f13", "-f23", "0", "f34"},
         {"-f14", "-f24", "-f34", "0"}}},
       {},
       {},
       {}},
      {"A_{4,2}",
       "s_{4,6}",
       "Solvable",
       "dimension 4",
       {
        {"0", "0", "0", "alpha"},
        {"0", "0", "-alpha", "0"},
        {"0", "-alpha", "0", "0"},
        {"alpha", "0", "0", "beta"}},
       {{
         {"0", "0", "0", "0"},
         {"0", "0", "u1+f23", "u2+f24"},
         {"0", "-u1-f23", "0", "-u3+f34"},
         {"0", "-u2-f24", "u3-f34", "0"}}},
       {},
       {},
       {{2, 3, {{1, "1"}}}, {2, 4, {{2, "1"}}}, {3, 4, {{3, "-1"}}}}},
      {"A_{4,3}",
       "s_{4,7}",
       "Solvable",
       "dimension 4",
       {
        {"0", "0", "0", "alpha"},
        {"0", "alpha", "0", "0"},
        {"0", "0", "alpha", "0"},
        {"alpha", "0", "0", "beta"}},
       {{
         {"0", "0", "0", "0"},
         {"0", "0", "u1+f23", "-u3+f24"},
         {"0", "-u1-f23", "0", "u2+f34"},
         {"0", "u3-f24", "-u2-f34", "0"}}},
       {},
       {},
       {{2, 3, {{1, "1"}}}, {2, 4, {{3, "-1"}}}, {3, 4, {{2, "1"}}}}},
      {"A_{4,4}",
       "sl(2,R)+n_{1,1}",
       "Direct sum",
       "dimension 4",
       {
        {"0", "0", "alpha", "0"},
        {"0", "(alpha)/(2)", "0", "0"},
        {"alpha", "0", "0", "0"},
        {"0", "0", "0", "beta"}},
       {{
         {"0", "u1+f12", "-2*u2+f13", "0"},
         {"-u1-f12", "0", "u3+f23", "0"},
         {"2*u2-f13", "-u3-f23", "0", "0"},
         {"0", "0", "0", "0"}}},
       {},
       {},
       {{1, 2, {{1, "1"}}}, {1, 3, {{2, "-2"}}}, {2, 3, {{3, "1"}}}}},
      {"A_{4,5}",
       "so(3,R)+n_{1,1}",
       "Direct sum",
       "dimension 4",
       {
        {"alpha", "0", "0", "0"},
        {"0", "alpha", "0", "0"},
        {"0", "0", "alpha", "0"},
        {"0", "0", "0", "beta"}},
       {{
         {"0", "u3+f12", "-u2+f13", "0"},
         {"-u3-f12", "0", "u1+f23", "0"},
         {"u2-f13", "-u1-f23", "0", "0"},
         {"0", "0", "0", "0"}}},
       {},
       {},
       {{1, 2, {{3, "1"}}}, {1, 3, {{2, "-1"}}}, {2, 3, {{1, "1"}}}}},
      {"A_{5,1}",
       "5n_{1,1}",
       "Abelian",
       "dimension 5",
       {
        {"a11", "a12", "a13", "a14", "a15"},
        {"a12", "a22", "a23", "a24", "a25"},
        {"a13", "a23", "a33", "a34", "a35"},
        {"a14", "a24", "a34", "a44", "a45"},
        {"a15", "a25", "a35", "a45", "a55"}},
       {{
         {"0", "f12", "f13", "f14", "f15"},
         {"-f12", "0", "f23", "f24", "f25"},
         {"-f13", "-f23", "0", "f34", "f35"},
         {"-f14", "-f24", "-f34", "0", "f45"},
         {"-f15", "-f25", "-f35", "-f45", "0"}}},
       {},
       {},
       {}},
      {"A_{5,2}",
       "sl(2,R)+2n_{1,1}",
       "Direct sum",
       "dimension 5",
       {
        {"0", "0", "alpha", "0", "0"},
        {"0", "(alpha)/(2)", "0", "0", "0"},
        {"alpha", "0", "0", "0", "0"},
        {"0", "0", "0", "beta", "delta"},
        {"0", "0", "0", "delta", "gamma"}},
       {{
         {"0", "u1+f12", "-2*u2+f13", "0", "0"},
         {"-u1-f12", "0", "u3+f23", "0", "0"},
         {"2*u2-f13", "-u3-f23", "0", "0", "0"},
         {"0", "0", "0", "0", "f45"},
         {"0", "0", "0", "-f45", "0"}}},
       {},
       {},
       {{1, 2, {{1, "1"}}}, {1, 3, {{2, "-2"}}}, {2, 3, {{3, "1"}}}}},
      {"A_{5,3}",
       "so(3,R)+2n_{1,1}",
       "Direct sum",
       "dimension 5",
       {
        {"alpha", "0", "0", "0", "0"},
        {"0", "alpha", "0", "0", "0"},
        {"0", "0", "alpha", "0", "0"},
        {"0", "0", "0", "beta", "gamma"},
        {"0", "0", "0", "gamma", "delta"}},
       {{
         {"0", "u3+f12", "-u2+f13", "0", "0"},
         {"-u3-f12", "0", "u1+f23", "0", "0"},
         {"u2-f13", "-u1-f23", "0", "0", "0"},
         {"0", "0", "0", "0", "f45"},
         {"0", "0", "0", "-f45", "0"}}},
       {},
       {},
       {{1, 2, {{3, "1"}}}, {1, 3, {{2, "-1"}}}, {2, 3, {{1, "1"}}}}},
      {"A_{5,4}",
       "s_{4,6}+n_{1,1}",
       "Direct sum",
       "dimension 5",
       {
        {"0", "0", "0", "alpha", "0"},
        {"0", "0", "-alpha", "0", "0"},
        {"0", "-alpha", "0", "0", "0"},
        {"alpha", "0", "0", "beta", "gamma"},
        {"0", "0", "0", "gamma", "delta"}},
       {{
         {"0", "0", "0", "0", "0"},
         {"0", "0", "u1+f23", "u2+f24", "0"},
         {"0", "-u1-f23", "0", "-u3+f34", "0"},
         {"0", "-u2-f24", "u3-f34", "0", "f45"},
         {"0", "0", "0", "-f45", "0"}}},
       {},
       {},
       {{2, 3, {{1, "1"}}}, {2, 4, {{2, "1"}}}, {3, 4, {{3, "-1"}}}}},
      {"A_{5,5}",
       "s_{4,7}+n_{1,1}",
       "Direct sum",
       "dimension 5",
       {
        {"0", "0", "0", "alpha", "0"},
        {"0", "alpha", "0", "0", "0"},
        {"0", "0", "alpha", "0", "0"},
        {"alpha", "0", "0", "beta", "gamma"},
        {"0", "0", "0", "gamma", "delta"}},
       {{
         {"0", "0", "0", "0", "0"},
         {"0", "0", "u1+f23", "-u3+f24", "0"},
         {"0", "-u1-f23", "0", "u2+f34", "0"},
         {"0", "u3-f24", "-u2-f34", "0", "f45"},
         {"0", "0", "0", "-f45", "0"}}},
       {},
       {},
       {{2, 3, {{1, "1"}}}, {2, 4, {{3, "-1"}}}, {3, 4, {{2, "1"}}}}},
      {"A_{5,6}",
       "n_{5,2}",
       "3-Step Nilpotent",
       "dimension 5",
       {
        {"0", "0", "0", "alpha", "0"},
        {"0", "0", "0", "0", "-alpha"},
        {"0", "0", "-alpha", "0", "0"},
        {"alpha", "0", "0", "beta", "gamma"},
        {"0", "-alpha", "0", "gamma", "delta"}},
       {{
         {"0", "0", "0", "f14", "f15"},
         {"0", "0", "0", "f24", "f14"},
         {"0", "0", "0", "u2+f34", "u1+f35"},
         {"-f14", "-f24", "-u2-f34", "0", "u3+f45"},
         {"-f15", "-f14", "-u1-f35", "-u3-f45", "0"}}},
       {},
       {},
       {{3, 4, {{2, "1"}}}, {3, 5, {{1, "1"}}}, {4, 5, {{3, "1"}}}}},
      {"A_{6,1}",
       "6n_{1,1}",
       "Abelian",
       "dimension 6",
       {
        {"a11", "a12", "a13", "a14", "a15", "a16"},
        {"a12", "a22", "a23", "a24", "a25", "a26"},
        {"a13", "a23", "a33", "a34", "a35", "a36"},
        {"a14", "a24", "a34", "a44", "a45", "a46"},
        {"a15", "a25", "a35", "a45", "a55", "a56"},
        {"a16", "a26", "a36", "a46", "a56", "a66"}},
       {{
         {"0", "f12", "f13", "f14", "f15", "f16"},
         {"-f12", "0", "f23", "f24", "f25", "f26"},
         {"-f13", "-f23", "0", "f34", "f35", "f36"},
         {"-f14", "-f24", "-f34", "0", "f45", "f46"},
         {"-f15", "-f25", "-f35", "-f45", "0", "f56"},
         {"-f16", "-f26", "-f36", "-f46", "-f56", "0"}}},
       {},
       {},
       {}},
      {"A_{6,2}",
       "sl(2,R)+3n_{1,1}",
       "Direct sum",
       "dimension 6",
       {
        {"0", "0", "g13", "0", "0", "0"},
        {"0", "2*g13", "0", "0", "0", "0"},
        {"g13", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "g44", "g45", "g46"},
        {"0", "0", "0", "g45", "g55", "g56"},
        {"0", "0", "0", "g46", "g56", "g66"}},
       {{
         {"0", "-2*u1+f12", "u2+f13", "0", "0", "0"},
         {"2*u1-f12", "0", "-2*u3+f23", "0", "0", "0"},
         {"-u2-f13", "2*u3-f23", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "f45", "f46"},
         {"0", "0", "0", "-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {},
       {},
       {{1, 2, {{1, "-2"}}}, {1, 3, {{2, "1"}}}, {2, 3, {{3, "-2"}}}}},
      {"A_{6,3}",
       "so(3,R)+3n_{1,1}",
       "Direct sum",
       "dimension 6",
       {
        {"g22", "0", "0", "0", "0", "0"},
        {"0", "2*g22", "0", "0", "0", "0"},
        {"0", "0", "g22", "0", "0", "0"},
        {"0", "0", "0", "g44", "g45", "g46"},
        {"0", "0", "0", "g45", "g55", "g56"},
        {"0", "0", "0", "g46", "g56", "g66"}},
       {{
         {"0", "-u3+f12", "u2+f13", "0", "0", "0"},
         {"u3-f12", "0", "-u1+f23", "0", "0", "0"},
         {"-u2-f13", "u1-f23", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "f45", "f46"},
         {"0", "0", "0", "-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {{"eta", 2, 2, "2*g22", "g22"}},
       {},
       {{1, 2, {{3, "-1"}}}, {1, 3, {{2, "1"}}}, {2, 3, {{1, "-1"}}}}},
      {"A_{6,4}",
       "sl(2,R)+sl(2,R)",
       "Direct sum",
       "dimension 6",
       {
        {"0", "0", "g13", "0", "0", "0"},
        {"0", "2*g13", "0", "0", "0", "0"},
        {"g13", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "g46"},
        {"0", "0", "0", "0", "2*g46", "0"},
        {"0", "0", "0", "g46", "0", "0"}},
       {{
         {"0", "-2*u1", "u2", "0", "0", "0"},
         {"2*u1", "0", "-2*u3", "0", "0", "0"},
         {"-u2", "2*u3", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "-2*u4", "u5"},
         {"0", "0", "0", "2*u4", "0", "-2*u6"},
         {"0", "0", "0", "-u5", "2*u6", "0"}},
        {
         {"0", "f12", "f13", "0", "0", "0"},
         {"-f12", "0", "f23", "0", "0", "0"},
         {"-f13", "2-f23", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "f45", "f46"},
         {"0", "0", "0", "2-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {{"omega2", 3, 2, "2-f23", "-f23"}, {"omega2", 5, 4, "2-f45", "-f45"}},
       {},
       {{1, 2, {{1, "-2"}}}, {1, 3, {{2, "1"}}}, {2, 3, {{3, "-2"}}}, {4, 5, {{4, "-2"}}}, {4, 6, {{5, "1"}}}, {5, 6, {{6, "-2"}}}}},
      {"A_{6,5}",
       "so(3,R)+so(3,R)",
       "Direct sum",
       "dimension 6",
       {
        {"g22", "0", "0", "0", "0", "0"},
        {"0", "g22", "0", "0", "0", "0"},
        {"0", "0", "g22", "0", "0", "0"},
        {"0", "0", "0", "g55", "0", "0"},
        {"0", "0", "0", "0", "g55", "0"},
        {"0", "0", "0", "0", "0", "g55"}},
       {{
         {"0", "-u3", "u2", "0", "0", "0"},
         {"u3", "0", "-u1", "0", "0", "0"},
         {"-u2", "u1", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "-u6", "u5"},
         {"0", "0", "0", "u6", "0", "-u4"},
         {"0", "0", "0", "-u5", "u4", "0"}},
        {
         {"0", "f12", "f13", "0", "0", "0"},
         {"-f12", "0", "f23", "0", "0", "0"},
         {"-f13", "-f23", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "f45", "f46"},
         {"0", "0", "0", "-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {},
       {},
       {{1, 2, {{3, "-1"}}}, {1, 3, {{2, "1"}}}, {2, 3, {{1, "-1"}}}, {4, 5, {{6, "-1"}}}, {4, 6, {{5, "1"}}}, {5, 6, {{4, "-1"}}}}},
      {"A_{6,6}",
       "sl(2,R)+so(3,R)",
       "Direct sum",
       "dimension 6",
       {
        {"0", "0", "g13", "0", "0", "0"},
        {"0", "2*g13", "0", "0", "0", "0"},
        {"g13", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "g55", "0", "0"},
        {"0", "0", "0", "0", "g55", "0"},
        {"0", "0", "0", "0", "0", "g55"}},
       {{
         {"0", "-2*u1", "u2", "0", "0", "0"},
         {"2*u1", "0", "-2*u3", "0", "0", "0"},
         {"-u2", "2*u3", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "-u6", "u5"},
         {"0", "0", "0", "u6", "0", "-u4"},
         {"0", "0", "0", "-u5", "u4", "0"}},
        {
         {"0", "f12", "f13", "0", "0", "0"},
         {"-f12", "0", "f23", "0", "0", "0"},
         {"-f13", "-f23", "0", "0", "0", "0"},
         {"0", "0", "0", "0", "f45", "f46"},
         {"0", "0", "0", "-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {},
       {},
       {{1, 2, {{1, "-2"}}}, {1, 3, {{2, "1"}}}, {2, 3, {{3, "-2"}}}, {4, 5, {{6, "-1"}}}, {4, 6, {{5, "1"}}}, {5, 6, {{4, "-1"}}}}},
      {"A_{6,7}",
       "s_{4,6}+2n_{1,1}",
       "Direct sum",
       "dimension 6",
       {
        {"0", "0", "0", "g14", "0", "0"},
        {"0", "0", "g14", "0", "0", "0"},
        {"0", "g14", "0", "0", "0", "0"},
        {"g14", "0", "0", "g44", "g45", "g46"},
        {"0", "0", "0", "g45", "g55", "g56"},
        {"0", "0", "0", "g46", "g56", "g66"}},
       {{
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "-u1+f23", "u2+f24", "0", "0"},
         {"0", "u1-f23", "0", "-u3+f34", "0", "0"},
         {"0", "-u2-f24", "u3-f34", "0", "f45", "f46"},
         {"0", "0", "0", "-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {},
       {},
       {{2, 3, {{1, "-1"}}}, {2, 4, {{2, "1"}}}, {3, 4, {{3, "-1"}}}}},
      {"A_{6,8}",
       "s_{4,7}+2n_{1,1}",
       "Direct sum",
       "dimension 6",
       {
        {"0", "0", "0", "g14", "0", "0"},
        {"0", "-g14", "0", "0", "0", "0"},
        {"0", "0", "-g14", "0", "0", "0"},
        {"g14", "0", "0", "g44", "g45", "g46"},
        {"0", "0", "0", "g45", "g55", "g56"},
        {"0", "0", "0", "g46", "g56", "g66"}},
       {{
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "-u1+f23", "-u3+f24", "0", "0"},
         {"0", "u1-f23", "0", "u2+f34", "0", "0"},
         {"0", "u3-f24", "-u2-f34", "0", "f45", "f46"},
         {"0", "0", "0", "-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {},
       {},
       {{2, 3, {{1, "-1"}}}, {2, 4, {{3, "-1"}}}, {3, 4, {{2, "1"}}}}},
      {"A_{6,9}",
       "n_{5,2}+n_{1,1}",
       "Direct sum",
       "dimension 6",
       {
        {"0", "0", "0", "g14", "0", "0"},
        {"0", "0", "0", "0", "-g14", "0"},
        {"0", "0", "-g14", "0", "0", "0"},
        {"g14", "0", "0", "g44", "g45", "g46"},
        {"0", "-g14", "0", "g45", "g55", "g56"},
        {"0", "0", "0", "g46", "g56", "g66"}},
       {{
         {"0", "0", "0", "f14", "f15", "0"},
         {"0", "0", "0", "f24", "f14", "0"},
         {"0", "0", "0", "-u2+f34", "-u1+f35", "0"},
         {"-f14", "-f24", "u2-f34", "0", "-u3+f45", "f46"},
         {"-f15", "-f14", "u1-f35", "u3-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {},
       {},
       {{3, 4, {{2, "-1"}}}, {3, 5, {{1, "-1"}}}, {4, 5, {{3, "-1"}}}}},
      {"A_{6,10}",
       "n_{6,1}",
       "2-Step Nilpotent",
       "dimension 6",
       {
        {"0", "0", "0", "g14", "0", "0"},
        {"0", "0", "0", "0", "-g14", "0"},
        {"0", "0", "-g14", "0", "0", "0"},
        {"g14", "0", "0", "g44", "g45", "g46"},
        {"0", "-g14", "0", "g45", "g55", "g56"},
        {"0", "0", "0", "g46", "g56", "g66"}},
       {{
         {"0", "0", "0", "f14", "f15", "0"},
         {"0", "0", "0", "f24", "f14", "0"},
         {"0", "0", "0", "-u2+f34", "-u1+f35", "0"},
         {"-f14", "-f24", "u2-f34", "0", "-u3+f45", "f46"},
         {"-f15", "-f14", "u1-f35", "u3-f45", "0", "f56"},
         {"0", "0", "0", "-f46", "-f56", "0"}}},
       {},
       {},
       {{3, 4, {{2, "-1"}}}, {3, 5, {{1, "-1"}}}, {4, 5, {{3, "-1"}}}}},
      {"A_{6,11}",
       "s_{6,162}",
       "Solvable",
       "dimension 6",
       {
        {"0", "0", "0", "0", "0", "g16"},
        {"0", "0", "0", "g16", "0", "0"},
        {"0", "0", "0", "0", "(g16)/(a)", "0"},
        {"0", "g16", "0", "0", "0", "0"},
        {"0", "0", "(g16)/(a)", "0", "0", "0"},
        {"g16", "0", "0", "0", "0", "g66"}},
       {{
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "0", "-u1+f24", "0", "u2+f26"},
         {"0", "0", "0", "0", "-u1+f35", "a*u3+f36"},
         {"0", "u1-f24", "0", "0", "0", "-u4+f46"},
         {"0", "0", "u1-f35", "0", "0", "-a*u5+f56"},
         {"0", "-u2-f26", "-a*u3-f36", "u4-f46", "a*u5-f56", "0"}}},
       {},
       {{"a", "1/2"}},
       {{2, 4, {{1, "-1"}}}, {2, 6, {{2, "1"}}}, {3, 5, {{1, "-1"}}}, {3, 6, {{3, "a"}}}, {4, 6, {{4, "-1"}}}, {5, 6, {{5, "-a"}}}}},
      {"A_{6,12}",
       "s_{6,163}",
       "Solvable",
       "dimension 6",
       {
        {"0", "0", "0", "0", "0", "g16"},
        {"0", "0", "0", "g16", "-g16", "0"},
        {"0", "0", "0", "0", "g16", "0"},
        {"0", "g16", "0", "0", "0", "0"},
        {"0", "-g16", "g16", "0", "0", "0"},
        {"g16", "0", "0", "0", "0", "g66"}},
       {{
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "0", "-u1+f24", "f25", "+u2+u3+f26"},
         {"0", "0", "0", "0", "-u1+f24", "u3+f36"},
         {"0", "u1-f24", "0", "0", "0", "-u4+f46"},
         {"0", "-f25", "u1-f24", "0", "0", "-u4-u5+f56"},
         {"0", "-u2-u3-f26", "-u3-f36", "u4-f46", "+u4+u5-f56", "0"}}},
       {},
       {},
       {{2, 4, {{1, "-1"}}}, {2, 6, {{2, "1"}, {3, "1"}}}, {3, 5, {{1, "-1"}}}, {3, 6, {{3, "1"}}}, {4, 6, {{4, "-1"}}}, {5, 6, {{4, "-1"}, {5, "-1"}}}}},
      {"A_{6,13}",
       "s_{6,164}",
       "Solvable",
       "dimension 6",
       {
        {"0", "0", "0", "0", "0", "g16"},
        {"0", "0", "0", "(g16)/(alpha)", "0", "0"},
        {"0", "0", "g16", "0", "0", "0"},
        {"0", "(g16)/(alpha)", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "g16", "0"},
        {"g16", "0", "0", "0", "0", "g66"}},
       {{
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "0", "-u1+f24", "0", "alpha*u2+f26"},
         {"0", "0", "0", "0", "-u1+f35", "u5+f36"},
         {"0", "u1-f24", "0", "0", "0", "-alpha*u4+f46"},
         {"0", "0", "u1-f35", "0", "0", "-u3+f56"},
         {"0", "-alpha*u2-f26", "-u5-f36", "alpha*u4-f46", "u3-f56", "0"}}},
       {},
       {{"alpha", "2"}},
       {{2, 4, {{1, "-1"}}}, {2, 6, {{2, "alpha"}}}, {3, 5, {{1, "-1"}}}, {3, 6, {{5, "1"}}}, {4, 6, {{4, "-alpha"}}}, {5, 6, {{3, "-1"}}}}},
      {"A_{6,14}",
       "s_{6,165}",
       "Solvable",
       "dimension 6",
       {
        {"0", "0", "0", "0", "0", "(alpha^2+1)*(-g25)"},
        {"0", "0", "0", "alpha*(-g25)", "g25", "0"},
        {"0", "0", "0", "-g25", "alpha*(-g25)", "0"},
        {"0", "alpha*(-g25)", "-g25", "0", "0", "0"},
        {"0", "g25", "alpha*(-g25)", "0", "0", "0"},
        {"(alpha^2+1)*(-g25)", "0", "0", "0", "0", "g66"}},
       {{
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "0", "-u1", "0", "alpha*u2+u3"},
         {"0", "0", "0", "0", "-u1", "alpha*u3-u2"},
         {"0", "u1", "0", "0", "0", "-alpha*u4+u5"},
         {"0", "0", "u1", "0", "0", "-alpha*u5-u4"},
         {"0", "-alpha*u2-u3", "-alpha*u3+u2", "alpha*u4-u5", "alpha*u5+u4", "0"}},
        {
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "0", "f24", "f25", "f26"},
         {"0", "0", "0", "-f25", "f24", "f36"},
         {"0", "-f24", "f25", "0", "0", "f46"},
         {"0", "-f25", "-f24", "0", "0", "f56"},
         {"0", "-f26", "-f36", "-f46", "-f56", "0"}}},
       {},
       {{"alpha", "2"}},
       {{2, 4, {{1, "-1"}}}, {2, 6, {{2, "alpha"}, {3, "1"}}}, {3, 5, {{1, "-1"}}}, {3, 6, {{2, "-1"}, {3, "alpha"}}}, {4, 6, {{4, "-alpha"}, {5, "1"}}}, {5, 6, {{4, "-1"}, {5, "-alpha"}}}}},
      {"A_{6,15}",
       "s_{6,166}",
       "Solvable",
       "dimension 6",
       {
        {"0", "0", "0", "0", "0", "g16"},
        {"0", "g16", "0", "0", "0", "0"},
        {"0", "0", "(g16)/(a)", "0", "0", "0"},
        {"0", "0", "0", "g16", "0", "0"},
        {"0", "0", "0", "0", "(g16)/(a)", "0"},
        {"g16", "0", "0", "0", "0", "g66"}},
       {{
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "0", "-u1+f24", "0", "u4+f26"},
         {"0", "0", "0", "0", "-u1+f35", "a*u5+f36"},
         {"0", "u1-f24", "0", "0", "0", "-u2+f46"},
         {"0", "0", "u1-f35", "0", "0", "-a*u3+f56"},
         {"0", "-u4-f26", "-a*u5-f36", "u2-f46", "a*u3-f56", "0"}}},
       {},
       {{"a", "1/2"}},
       {{2, 4, {{1, "-1"}}}, {2, 6, {{4, "1"}}}, {3, 5, {{1, "-1"}}}, {3, 6, {{5, "a"}}}, {4, 6, {{2, "-1"}}}, {5, 6, {{3, "-a"}}}}},
      {"A_{6,16}",
       "s_{6,167}",
       "Solvable",
       "dimension 6",
       {
        {"0", "0", "0", "0", "0", "g16"},
        {"0", "-g16", "0", "0", "-g16", "0"},
        {"0", "0", "-g16", "g16", "0", "0"},
        {"0", "0", "g16", "0", "0", "0"},
        {"0", "-g16", "0", "0", "0", "0"},
        {"g16", "0", "0", "0", "0", "g66"}},
       {{
         {"0", "0", "0", "0", "0", "0"},
         {"0", "0", "f23", "-u1*f24", "0", "u3+u4+f26"},
         {"0", "-f23", "0", "0", "-u1+f24", "-u2+u5+f36"},
         {"0", "u1-f24", "0", "0", "0", "u5+f46"},
         {"0", "0", "u1-f24", "0", "0", "-u4+f56"},
         {"0", "-u3-u4-f26", "u2-u5-f36", "-u5-f46", "u4-f56", "0"}}},
       {{"omega1", 2, 4, "-u1*f24", "-u1+f24"}},
       {},
       {{2, 4, {{1, "-1"}}}, {2, 6, {{3, "1"}, {4, "1"}}}, {3, 5, {{1, "-1"}}}, {3, 6, {{2, "-1"}, {5, "1"}}}, {4, 6, {{5, "1"}}}, {5, 6, {{4, "-1"}}}}},
      {"A_{6,17}",
       "so(1,3,R)",
       "Simple",
       "dimension 6",
       {
        {"-g55", "0", "0", "g25", "0", "0"},
        {"0", "-g55", "0", "0", "g25", "0"},
        {"0", "0", "-g55", "0", "0", "g25"},
        {"g25", "0", "0", "g55", "0", "0"},
        {"0", "g25", "0", "0", "g55", "0"},
        {"0", "0", "g25", "0", "0", "g55"}},
       {{
         {"0", "-u3", "u2", "0", "-u6", "u5"},
         {"u3", "0", "-u1", "u6", "0", "-u4"},
         {"-u2", "u1", "0", "-u5", "u4", "0"},
         {"0", "-u6", "u5", "0", "u3", "-u2"},
         {"u6", "0", "-u4", "-u3", "0", "u1"},
         {"-u5", "u4", "0", "u2", "-u1", "0"}},
        {
         {"0", "f12", "f13", "0", "f15", "f16"},
         {"-f12", "0", "f23", "-f15", "0", "f26"},
         {"-f13", "-f23", "0", "-f16", "-f26", "0"},
         {"0", "+f15", "f16", "0", "-f12", "-f13"},
         {"-f15", "0", "f26", "f12", "0", "-f23"},
         {"-f16", "-f26", "0", "f13", "f23", "0"}}},
       {},
       {},
       {{1, 2, {{3, "-1"}}}, {1, 3, {{2, "1"}}}, {1, 5, {{6, "-1"}}}, {1, 6, {{5, "1"}}}, {2, 3, {{1, "-1"}}}, {2, 4, {{6, "1"}}}, {2, 6, {{4, "-1"}}}, {3, 4, {{5, "-1"}}}, {3, 5, {{4, "1"}}}, {4, 5, {{3, "1"}}}, {4, 6, {{2, "-1"}}}, {5, 6, {{1, "1"}}}}},
      {"A_{6,18}",
       "sl(3,R)x3n_{1,1}",
       "Levi decomposable",
       "dimension 6",
       {
        {"g22", "0", "0", "g25", "0", "0"},
        {"0", "g22", "0", "0", "g25", "0"},
        {"0", "0", "g22", "0", "0", "g25"},
        {"g25", "0", "0", "0", "0", "0"},
        {"0", "g25", "0", "0", "0", "0"},
        {"0", "0", "g25", "0", "0", "0"}},
       {{
         {"0", "-u3", "u2", "0", "-u6", "u5"},
         {"u3", "0", "-u1", "u6", "0", "-u4"},
         {"-u2", "u1", "0", "-u5", "u4", "0"},
         {"0", "-u6", "u5", "0", "0", "0"},
         {"u6", "0", "-u4", "0", "0", "0"},
         {"-u5", "u4", "0", "0", "0", "0"}},
        {
         {"0", "f12", "f13", "0", "f15", "f16"},
         {"-f12", "0", "f23", "-f15", "0", "f26"},
         {"-f13", "-f23", "0", "-f16", "-f26", "0"},
         {"0", "f15", "f16", "0", "0", "0"},
         {"-f15", "0", "f26", "0", "0", "0"},
         {"-f16", "-f26", "0", "0", "0", "0"}}},
       {},
       {},
       {{1, 2, {{3, "-1"}}}, {1, 3, {{2, "1"}}}, {1, 5, {{6, "-1"}}}, {1, 6, {{5, "1"}}}, {2, 3, {{1, "-1"}}}, {2, 4, {{6, "1"}}}, {2, 6, {{4, "-1"}}}, {3, 4, {{5, "-1"}}}, {3, 5, {{4, "1"}}}}},
      {"sl3",
       "sl(3,R)",
       "Simple",
       "sl(3) example",
       {
        {"2*alpha", "alpha", "0", "0", "0", "0", "0", "0"},
        {"alpha", "2*alpha", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "alpha", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "alpha", "0"},
        {"0", "0", "alpha", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "alpha"},
        {"0", "0", "0", "alpha", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "alpha", "0", "0"}},
       {{
         {"0", "0", "u3", "2*u4", "-u5", "u6", "-2*u7", "-u8"},
         {"0", "0", "-u3", "u4", "u5", "2*u6", "-u7", "-2*u8"},
         {"-u3", "u3", "0", "0", "u1-u2", "u4", "-u8", "0"},
         {"-2*u4", "-u4", "0", "0", "-u6", "0", "u1", "u3"},
         {"u5", "-u5", "u2-u1", "u6", "0", "0", "0", "-u7"},
         {"-u6", "-2*u6", "-u4", "0", "0", "0", "u5", "u2"},
         {"2*u7", "u7", "u8", "-u1", "0", "-u5", "0", "0"},
         {"u8", "2*u8", "0", "-u3", "u7", "-u2", "0", "0"}},
        {
         {"0", "0", "-f23", "2*f24", "-f25", "f16", "2*f27", "f18"},
         {"0", "0", "f23", "f24", "f25", "2*f16", "f27", "2*f18"},
         {"f23", "-f23", "0", "0", "f35", "f24", "f18", "0"},
         {"-2*f24", "-f24", "0", "0", "-f16", "0", "f47", "-f23"},
         {"f25", "-f25", "-f35", "f16", "0", "0", "0", "f27"},
         {"-f16", "-2*f16", "-f24", "0", "0", "0", "f25", "f47-f35"},
         {"-2*f27", "-f27", "-f18", "-f47", "0", "-f25", "0", "0"},
         {"-f18", "-2*f18", "0", "f23", "-f27", "f35-f47", "0", "0"}}},
       {},
       {},
       {{1, 3, {{3, "1"}}}, {1, 4, {{4, "2"}}}, {1, 5, {{5, "-1"}}}, {1, 6, {{6, "1"}}}, {1, 7, {{7, "-2"}}}, {1, 8, {{8, "-1"}}}, {2, 3, {{3, "-1"}}}, {2, 4, {{4, "1"}}}, {2, 5, {{5, "1"}}}, {2, 6, {{6, "2"}}}, {2, 7, {{7, "-1"}}}, {2, 8, {{8, "-2"}}}, {3, 5, {{1, "1"}, {2, "-1"}}}, {3, 6, {{4, "1"}}}, {3, 7, {{8, "-1"}}}, {4, 5, {{6, "-1"}}}, {4, 7, {{1, "1"}}}, {4, 8, {{3, "1"}}}, {5, 8, {{7, "-1"}}}, {6, 7, {{5, "1"}}}, {6, 8, {{2, "1"}}}}},
      {"g2",
       "g_2",
       "Simple",
       "split g2",
       {
        {"-6*alpha", "3*alpha", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"3*alpha", "-2*alpha", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "3*alpha", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "0", "alpha", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "3*alpha", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "3*alpha", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "alpha", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "alpha"},
        {"0", "0", "3*alpha", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "alpha", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "3*alpha", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "3*alpha", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "alpha", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "alpha", "0", "0", "0", "0", "0", "0"}},
       {{
         {"0", "0", "2*u3", "-3*u4", "-u5", "u6", "3*u7", "0", "-2*u9", "3*u10", "u11", "-u12", "-3*u13", "0"},
         {"0", "0", "-u3", "2*u4", "u5", "0", "-u7", "u8", "u9", "-2*u10", "-u11", "0", "u13", "-u14"},
         {"-2*u3", "u3", "0", "u5", "2*u6", "-3*u7", "0", "0", "-u1", "0", "-3*u10", "-2*u11", "u12", "0"},
         {"3*u4", "-2*u4", "-u5", "0", "0", "0", "-u8", "0", "0", "-u2", "u9", "0", "0", "u13"},
         {"u5", "-u5", "-2*u6", "0", "0", "-3*u8", "0", "0", "3*u4", "-u3", "-u1-3*u2", "2*u9", "0", "u12"},
         {"-u6", "0", "3*u7", "0", "3*u8", "0", "0", "0", "2*u5", "0", "-2*u3", "-2*u1-3*u2", "-u9", "-u11"},
         {"-3*u7", "u7", "0", "u8", "0", "0", "0", "0", "-u6", "0", "0", "u3", "-u1-u2", "-u10"},
         {"0", "-u8", "0", "0", "0", "0", "0", "0", "0", "-u7", "-u6", "u5", "u4", "-u1-2*u2"},
         {"2*u9", "-u9", "u1", "0", "-3*u4", "-2*u5", "u6", "0", "0", "u11", "2*u12", "-3*u13", "0", "0"},
         {"-3*u10", "2*u10", "0", "u2", "u3", "0", "0", "u7", "-u11", "0", "0", "0", "-u14", "0"},
         {"-u11", "u11", "3*u10", "-u9", "u1+3*u2", "2*u3", "0", "u6", "-2*u12", "0", "0", "-3*u14", "0", "0"},
         {"u12", "0", "2*u11", "0", "-2*u9", "2*u1+3*u2", "-u3", "-u5", "3*u13", "0", "3*u14", "0", "0", "0"},
         {"3*u13", "-u13", "-u12", "0", "0", "u9", "u1+u2", "-u4", "0", "u14", "0", "0", "0", "0"},
         {"0", "u14", "0", "-u13", "-u12", "u11", "u10", "u1+2*u2", "0", "0", "0", "0", "0", "0"}},
        {
         {"0", "0", "a1", "a2", "a3", "a4", "a5", "0", "0", "-3*a7", "0", "0", "-3*a7", "0"},
         {"0", "0", "-(a1)/(2)", "-(2*a2)/(3)", "-a3", "0", "-(a5)/(3)", "a6", "0", "2*a7", "0", "0", "a7", "a10"},
         {"-a1", "(a1)/(2)", "0", "-a3", "2*a4", "-a5", "0", "0", "a9-a8", "0", "3*a7", "0", "0", "0"},
         {"-a2", "(2*a2)/(3)", "a3", "0", "0", "0", "-a6", "0", "0", "a8", "0", "0", "0", "a7"},
         {"-a3", "a3", "-2*a4", "0", "0", "-3*a6", "0", "0", "-a2", "-(a1)/(2)", "2*a8+a9", "0", "0", "0"},
         {"-a4", "0", "a5", "0", "3*a6", "0", "0", "0", "-2*a3", "0", "-a1", "a8+2*a9", "0", "0"},
         {"-a5", "(a5)/(3)", "0", "a6", "0", "0", "0", "0", "-a4", "0", "0", "(a1)/(2)", "a9", "a7"},
         {"0", "-a6", "0", "0", "0", "0", "0", "0", "0", "-(a5)/(3)", "-a4", "-a3", "-(a2)/(3)", "a8+a9"},
         {"0", "0", "a8-a9", "0", "a2", "2*a3", "a4", "0", "0", "0", "0", "-3*a7", "0", "0"},
         {"3*a7", "-2*a7", "0", "-a8", "(a1)/(2)", "0", "0", "(a5)/(3)", "0", "0", "0", "0", "a10", "0"},
         {"0", "0", "-3*a7", "0", "-2*a8-a9", "a1", "0", "a4", "0", "0", "0", "3*a10", "0", "0"},
         {"0", "0", "0", "0", "0", "-a8-2*a9", "-(a1)/(2)", "a3", "3*a7", "0", "-3*a10", "0", "0", "0"},
         {"3*a7", "-a7", "0", "0", "0", "0", "-a9", "(a2)/(3)", "0", "-a10", "0", "0", "0", "0"},
         {"0", "-a10", "0", "-a7", "0", "0", "-a7", "-a8-a9", "0", "0", "0", "0", "0", "0"}}},
       {},
       {},
       {{1, 3, {{3, "2"}}}, {1, 4, {{4, "-3"}}}, {1, 5, {{5, "-1"}}}, {1, 6, {{6, "1"}}}, {1, 7, {{7, "3"}}}, {1, 9, {{9, "-2"}}}, {1, 10, {{10, "3"}}}, {1, 11, {{11, "1"}}}, {1, 12, {{12, "-1"}}}, {1, 13, {{13, "-3"}}}, {2, 3, {{3, "-1"}}}, {2, 4, {{4, "2"}}}, {2, 5, {{5, "1"}}}, {2, 7, {{7, "-1"}}}, {2, 8, {{8, "1"}}}, {2, 9, {{9, "1"}}}, {2, 10, {{10, "-2"}}}, {2, 11, {{11, "-1"}}}, {2, 13, {{13, "1"}}}, {2, 14, {{14, "-1"}}}, {3, 4, {{5, "1"}}}, {3, 5, {{6, "2"}}}, {3, 6, {{7, "-3"}}}, {3, 9, {{1, "-1"}}}, {3, 11, {{10, "-3"}}}, {3, 12, {{11, "-2"}}}, {3, 13, {{12, "1"}}}, {4, 7, {{8, "-1"}}}, {4, 10, {{2, "-1"}}}, {4, 11, {{9, "1"}}}, {4, 14, {{13, "1"}}}, {5, 6, {{8, "-3"}}}, {5, 9, {{4, "3"}}}, {5, 10, {{3, "-1"}}}, {5, 11, {{1, "-1"}, {2, "-3"}}}, {5, 12, {{9, "2"}}}, {5, 14, {{12, "1"}}}, {6, 9, {{5, "2"}}}, {6, 11, {{3, "-2"}}}, {6, 12, {{1, "-2"}, {2, "-3"}}}, {6, 13, {{9, "-1"}}}, {6, 14, {{11, "-1"}}}, {7, 9, {{6, "-1"}}}, {7, 12, {{3, "1"}}}, {7, 13, {{1, "-1"}, {2, "-1"}}}, {7, 14, {{10, "-1"}}}, {8, 10, {{7, "-1"}}}, {8, 11, {{6, "-1"}}}, {8, 12, {{5, "1"}}}, {8, 13, {{4, "1"}}}, {8, 14, {{1, "-1"}, {2, "-2"}}}, {9, 10, {{11, "1"}}}, {9, 11, {{12, "2"}}}, {9, 12, {{13, "-3"}}}, {10, 13, {{14, "-1"}}}, {11, 12, {{14, "-3"}}}}},
  };
  return sources;
}

}  // namespace lieham::detail
