#include "subfan/counting.hpp"

namespace subfan {

namespace {

const std::vector<std::vector<const char*>> kSig92 = {
    {"21/20", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0"},
    {"1/20", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1"},
    {"81/20", "0", "1", "0", "3", "0", "2", "0", "2", "0", "3", "0", "1", "0", "4", "0", "0", "0"},
    {"201/20", "10", "0", "1", "9", "9", "0", "4", "7", "7", "0", "9", "4", "4", "0", "16", "0", "0"},
    {"801/20", "30", "10", "4", "27", "26", "19", "14", "14", "19", "26", "27", "4", "10", "30", "40", "0", "0"},
    {"81/20", "0", "0", "1", "3", "0", "0", "2", "2", "0", "0", "3", "1", "0", "0", "4", "0", "0"},
    {"1/20", "4", "0", "1", "0", "3", "0", "2", "0", "2", "0", "3", "0", "1", "0", "4", "0", "0"},
    {"321/20", "0", "4", "4", "9", "0", "7", "7", "4", "0", "9", "9", "1", "0", "10", "10", "0", "0"},
    {"1/10", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0"},
    {"1/20", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0"},
};

const std::vector<std::vector<const char*>> kSig113 = {
    {"51/50", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "201/200", "0", "0", "0", "1", "0", "0", "3/50", "1", "0"},
    {"1/50", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "1/200", "1", "0", "0", "0", "1", "0", "1/50", "0", "1"},
    {"127/25", "0", "1", "0", "4", "0", "2", "0", "3", "0", "3", "0", "401/200", "0", "4", "0", "1", "0", "5", "1/50", "0", "0"},
    {"376/25", "15", "0", "1", "14", "14", "0", "4", "12", "12", "0", "9", "1801/200", "9", "0", "16", "5", "5", "0", "1251/50", "0", "0"},
    {"3751/50", "55", "15", "5", "56", "50", "29", "18", "36", "41", "41", "36", "3601/200", "29", "50", "56", "5", "15", "55", "3751/50", "0", "0"},
    {"251/50", "0", "0", "1", "4", "0", "0", "2", "3", "0", "0", "3", "401/200", "0", "0", "4", "1", "0", "0", "251/50", "0", "0"},
    {"1/50", "5", "0", "1", "0", "4", "0", "2", "0", "3", "0", "3", "1/200", "2", "0", "4", "0", "1", "0", "251/50", "0", "0"},
    {"1251/50", "0", "5", "5", "16", "0", "9", "9", "9", "0", "12", "12", "801/200", "0", "14", "14", "1", "0", "15", "751/50", "0", "0"},
    {"2/25", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "1/100", "0", "0", "1", "0", "0", "0", "51/50", "0", "0"},
    {"1/50", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "1/200", "0", "1", "0", "0", "0", "1", "1/50", "0", "0"},
};

const std::vector<std::vector<const char*>> kRays92 = {
    {"-1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "-1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "-1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "-1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "-1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "-1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-1", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-1"},
    {"77/5", "4", "-4", "-9", "6", "1", "-1", "-2"},
    {"189/20", "10", "-1", "-12", "3", "4", "0", "-3"},
    {"199/10", "8", "-2", "-15", "6", "2", "1", "-3"},
    {"201/10", "8", "-5", "-12", "6", "2", "-1", "-1"},
    {"-141/20", "0", "3", "3", "-3", "0", "1", "1"},
    {"17/20", "-8", "-3", "9", "0", "-3", "-1", "3"},
    {"-397/20", "-8", "3", "15", "-6", "-2", "0", "3"},
    {"-20", "-8", "5", "13", "-6", "-2", "1", "2"},
    {"-73/10", "-4", "1", "6", "-2", "-1", "0", "1"},
    {"-41/4", "-1", "4", "3", "-3", "0", "1", "0"},
};

const std::vector<std::vector<const char*>> kRays113 = {
    {"-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1"},
    {"34142/2005", "2600/1203", "-6200/1203", "-3880/401", "3960/401", "1040/1203", "-2840/1203", "-1780/401", "1720/401", "260/1203", "-860/1203", "-1720/1203"},
    {"2196909/200500", "5424/401", "-133/401", "-74871/4010", "11946/2005", "14858/2005", "749/4010", "-34131/4010", "3852/2005", "6722/2005", "721/4010", "-5294/2005"},
    {"958753/40100", "3090/401", "-1045/401", "-15915/802", "4680/401", "1236/401", "375/802", "-6431/802", "1413/401", "309/401", "1133/802", "-872/401"},
    {"478059/20050", "9205/1203", "-7792/1203", "-12513/802", "4581/401", "3682/1203", "-5951/2406", "-1968/401", "1370/401", "1841/2406", "-685/1203", "-167/1203"},
    {"-1344229/200500", "3398/1203", "4945/1203", "2501/4010", "-9596/2005", "6796/6015", "28123/12030", "4961/4010", "-4492/2005", "1699/6015", "10507/12030", "4492/6015"},
    {"87853/200500", "-5977/401", "-2219/401", "74643/4010", "-1908/2005", "-15964/2005", "-11057/4010", "37623/4010", "-1011/2005", "-5996/2005", "-3673/4010", "6352/2005"},
    {"-2356367/100250", "-3034/401", "1405/401", "39228/2005", "-23046/2005", "-6068/2005", "993/2005", "15888/2005", "-6972/2005", "-1517/2005", "-843/2005", "4329/2005"},
    {"-47046/2005", "-9050/1203", "7700/1203", "6565/401", "-4530/401", "-3620/1203", "2945/1203", "2340/401", "-1360/401", "-905/1203", "680/1203", "1360/1203"},
    {"-400064/50125", "-5468/1203", "824/1203", "16277/2005", "-6939/2005", "-10936/6015", "-674/6015", "5762/2005", "-1738/2005", "-2734/6015", "-1136/6015", "3743/6015"},
    {"-2203731/200500", "1010/401", "2311/401", "-891/4010", "-9684/2005", "3223/2005", "10159/4010", "-3871/4010", "-2748/2005", "1307/2005", "2921/4010", "-1089/2005"},
};

RationalMatrix load(const std::vector<std::vector<const char*>>& rows) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_rational(rows[i][j]);
  return m;
}

}  // namespace

const A4Builtins& a4_builtin_matrices() {
  static const A4Builtins data{load(kSig92), load(kSig113), load(kRays92), load(kRays113)};
  return data;
}

}  // namespace subfan
