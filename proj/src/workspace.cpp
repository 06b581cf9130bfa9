#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "nara/sequences.hpp"

namespace nara {

namespace {

struct Entry {
  const char* name;
  const char* source;
};

// One command per entry. Names are resolved recursively on first use.
const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = {
      // Base relations.
      {"incr", R"Q(def incr "?msd_nara j=i+1":)Q"},
      {"lshift", R"Q(reg lshift {0,1} {0,1} "([0,0]|[0,1][1,1]*[1,0])*":)Q"},
      {"rshift", R"Q(reg rshift {0,1} {0,1} "([0,0]|[1,0][1,1]*[0,1])*(()|[1,0][1,1]*)":)Q"},
      {"lastbit1", R"Q(reg lastbit1 msd_nara "(0|1)*1":)Q"},
      {"end1", R"Q(reg end1 msd_nara "(0+1)*1":)Q"},
      {"end30", R"Q(reg end30 {0,1} "(0|1)*1(000)*":)Q"},
      {"end31", R"Q(reg end31 {0,1} "(0|1)*1(000)*0":)Q"},
      {"end32", R"Q(reg end32 {0,1} "(0|1)*1(000)*00":)Q"},
      {"odd1", R"Q(reg odd1 {0,1} "0*(10*10*)*10*":)Q"},
      {"five", R"Q(reg five msd_nara msd_nara msd_nara msd_nara msd_nara
          "[0,0,0,0,0]*[1,0,0,0,0][0,1,0,0,0][0,0,1,0,0][0,0,0,1,0][0,0,0,0,1][0,0,0,0,0]*":)Q"},
      {"examples", R"Q(reg examples msd_nara "0*(100)*1001":)Q"},
      {"counterex", R"Q(reg counterex msd_nara "0*(100)*00001":)Q"},

      // Factor equality, appearance and periods of n.
      {"naraef", R"Q(def naraef "?msd_nara Au,v (u>=i & u<i+m & u+j=v+i) => NA[u]=NA[v]":)Q"},
      {"has_all", R"Q(def has_all "?msd_nara Ai Ej j<=x & $naraef(i,j,m)":)Q"},
      {"app", R"Q(def app "?msd_nara $has_all(m,x) & Ay $has_all(m,y) => y>=x":)Q"},
      {"appearance_check", R"Q(eval appearance_check "?msd_nara Am,t,d0,d1,v,w,x,y,z
          ($five(v,w,x,y,z) & $app(m,t) & d0=((z+2*x)-y)/3 &
          d1=((y+2*w)-x)/3 & d0<m & m<=d1 & m>=2) => t+1=v":)Q"},
      {"nara_isaper", R"Q(def nara_isaper "?msd_nara p>0 & p<=m & $naraef(i,i+p,m-p)":)Q"},
      {"nara_per", R"Q(def nara_per "?msd_nara $nara_isaper(i,m,p) & Aq (q<p) => ~$nara_isaper(i,m,q)":)Q"},
      {"nara_lp", R"Q(def nara_lp "?msd_nara Ei $nara_per(i,m,p) & Aj,q $nara_per(j,m,q) => q>=p":)Q"},
      {"nara_max", R"Q(def nara_max "?msd_nara $nara_lp(m,p) & Aq (q>m) => ~$nara_lp(q,p)":)Q"},
      {"bignm", R"Q(def bignm "?msd_nara $nara_max(m,p) & 5*m>14*p":)Q"},
      {"novel", R"Q(def novel n "?msd_nara Aj (j<i) => ~$naraef(i,j,n)":)Q"},
      {"a2n1", R"Q(def a2n1 n "?msd_nara i<2*n+1":)Q"},

      // Right-special factors.
      {"rtspec0", R"Q(def rtspec0 "?msd_nara $novel(x,n) & NA[x+n-1]=@0 &
          Ej $naraef(x,j,n) & NA[x+n]!=NA[j+n]":)Q"},
      {"rtspec1", R"Q(def rtspec1 "?msd_nara $novel(x,n) & NA[x+n-1]=@1 &
          Ej $naraef(x,j,n) & NA[x+n]!=NA[j+n]":)Q"},
      {"exist_rs_0", R"Q(eval exist_rs_0 "?msd_nara An (n>=1) => Ex $rtspec0(n,x)":)Q"},
      {"exist_rs_1", R"Q(eval exist_rs_1 "?msd_nara An (n>=1) => Ex $rtspec1(n,x)":)Q"},
      {"rtspec00", R"Q(def rtspec00 "?msd_nara Ex $rtspec0(m+1,x) & NA[x]=@0":)Q"},
      {"rtspec01", R"Q(def rtspec01 "?msd_nara Ex $rtspec0(m+1,x) & NA[x]=@1":)Q"},
      {"rtspec02", R"Q(def rtspec02 "?msd_nara Ex $rtspec0(m+1,x) & NA[x]=@2":)Q"},
      {"SP0", R"Q(combine SP0 rtspec00=0 rtspec01=1 rtspec02=2:)Q"},
      {"rtspec10", R"Q(def rtspec10 "?msd_nara Ex $rtspec1(m+1,x) & NA[x]=@0":)Q"},
      {"rtspec11", R"Q(def rtspec11 "?msd_nara Ex $rtspec1(m+1,x) & NA[x]=@1":)Q"},
      {"rtspec12", R"Q(def rtspec12 "?msd_nara Ex $rtspec1(m+1,x) & NA[x]=@2":)Q"},
      {"SP1", R"Q(combine SP1 rtspec10=0 rtspec11=1 rtspec12=2:)Q"},
      {"check", R"Q(eval check "?msd_nara An,x,y (n>=1 & $rtspec0(n,x) &
          $rtspec0(n+1,y)) => $naraef(x,y+1,n)":)Q"},

      // Positions of the letters.
      {"p0", R"Q(def p0 "?msd_nara Ex,y $lshift(j-1,x) & $lshift(x,y) & z=y+1":)Q"},
      {"p1", R"Q(def p1 "?msd_nara Ex,y,t $lshift(j-1,x) & $lshift(x,y) & $lshift(y,t) & z=t+2":)Q"},
      {"p2", R"Q(def p2 "?msd_nara Ex,y,t,u $lshift(j-1,x) & $lshift(x,y) & $lshift(y,t) &
          $lshift(t,u) & z=u+3":)Q"},
      {"p02", R"Q(def p02 "?msd_nara Ex $lshift(j-1,x) & z=x+1":)Q"},
      {"p0_test1", R"Q(eval p0_test1 "?msd_nara Aj,x,y (j>=1 & $p0(j,x) & $p0(j+1,y)) => x<y":)Q"},
      {"p0_test2", R"Q(eval p0_test2 "?msd_nara Ax (Ej j>=1 & $p0(j,x)) <=> NA[x-1]=@0":)Q"},
      {"p1_test1", R"Q(eval p1_test1 "?msd_nara Aj,x,y (j>=1 & $p1(j,x) & $p1(j+1,y)) => x<y":)Q"},
      {"p1_test2", R"Q(eval p1_test2 "?msd_nara Ax (Ej j>=1 & $p1(j,x)) <=> NA[x-1]=@1":)Q"},
      {"p1_test3", R"Q(eval p1_test3 "?msd_nara Aj,x,y (j>=1 & $p0(j,x) & $p1(j,y)) => y=x+j":)Q"},
      {"p2_test1", R"Q(eval p2_test1 "?msd_nara Aj,x,y (j>=1 & $p2(j,x) & $p2(j+1,y)) => x<y":)Q"},
      {"p2_test2", R"Q(eval p2_test2 "?msd_nara Ax (Ej j>=1 & $p2(j,x)) <=> NA[x-1]=@2":)Q"},
      {"p2_test3",
       R"Q(eval p2_test3 "?msd_nara Ax,y,z (Ej j>=1 & $p02(j,x) & $p1(j,y) & $p2(j,z)) => z=x+y":)Q"},
      {"p02_test1", R"Q(eval p02_test1 "?msd_nara Aj,x,y (j>=1 & $p02(j,x) & $p02(j+1,y)) => x<y":)Q"},
      {"p02_test2", R"Q(eval p02_test2 "?msd_nara Ax (Ej j>=1 & $p02(j,x)) <=>
          (NA[x-1]=@0|NA[x-1]=@2)":)Q"},

      // The 3-Zeckendorf array.
      {"col0", R"Q(def col0 "?msd_nara $p1(i+1,z+1)":)Q"},
      {"test1", R"Q(eval test1 "?msd_nara Ax (Ei $col0(i,x)) <=> $end1(x)":)Q"},
      {"col1", R"Q(def col1 "?msd_nara Ex $col0(i,x) & $lshift(x,z)":)Q"},
      {"col2", R"Q(def col2 "?msd_nara Ex $col1(i,x) & $lshift(x,z)":)Q"},
      {"colm1", R"Q(def colm1 "?msd_nara Ex,y $col2(i,x) & $col1(i,y) & z+y=x":)Q"},
      {"colm2", R"Q(def colm2 "?msd_nara Ex,y $col1(i,x) & $col0(i,y) & z+y=x":)Q"},
      {"colm3", R"Q(def colm3 "?msd_nara Ex,y $col0(i,x) & $colm1(i,y) & z+y=x":)Q"},
      {"parta", R"Q(eval parta "?msd_nara Ai $colm3(i,i)":)Q"},
      {"partb", R"Q(eval partb "?msd_nara Ai,x $colm2(i,x) <=> $p02(i+1,x)":)Q"},
      {"partc", R"Q(eval partc "?msd_nara Ai,x $colm1(i,x) <=> $p0(i+1,x)":)Q"},
      {"parte", R"Q(eval parte "?msd_nara Ai,x $col1(i,x) <=> (Ey $p2(i+1,y) & x+1=y)":)Q"},

      // Sumsets.
      {"s02", R"Q(def s02 "?msd_nara En n>=1 & $p02(n,x)":)Q"},
      {"s0", R"Q(def s0 "?msd_nara En n>=1 & $p0(n,x)":)Q"},
      {"s1", R"Q(def s1 "?msd_nara En n>=1 & $p1(n,x)":)Q"},
      {"s2", R"Q(def s2 "?msd_nara En n>=1 & $p2(n,x)":)Q"},
      {"two_P02", R"Q(eval two_P02 "?msd_nara An (n>=4) => Ex,y n=x+y & $s02(x) & $s02(y)":)Q"},
      {"two_P0", R"Q(eval two_P0 "?msd_nara An (n>=17) => Ex,y n=x+y & $s0(x) & $s0(y)":)Q"},
      {"two_P1", R"Q(def two_P1 "?msd_nara Ex,y n=x+y & $s1(x) & $s1(y)":)Q"},
      {"three_P1", R"Q(eval three_P1 "?msd_nara An (n>=27) => Ex,y,z n=x+y+z & $s1(x) &
          $s1(y) & $s1(z)":)Q"},
      {"two_P2", R"Q(def two_P2 "?msd_nara Ex,y n=x+y & $s2(x) & $s2(y)":)Q"},
      {"fam_p1", R"Q(reg fam_p1 msd_nara "0*(100)*100000":)Q"},
      {"fam_p2", R"Q(reg fam_p2 msd_nara "0*100(00)*1":)Q"},
      {"p1_family", R"Q(eval p1_family "?msd_nara An $fam_p1(n) => ~$two_P1(n)":)Q"},
      {"p2_family", R"Q(eval p2_family "?msd_nara An $fam_p2(n) => ~$two_P2(n)":)Q"},
      {"three_P2", R"Q(eval three_P2 "?msd_nara An (n>=140) => Ex,y,z n=x+y+z & $s2(x) &
          $s2(y) & $s2(z)":)Q"},
      {"check_p0", R"Q(eval check_p0 "?msd_nara Ak (k>=1) => ((Ej j>=1 & $p0(j,k)) <=> $end30(k))":)Q"},
      {"check_p1", R"Q(eval check_p1 "?msd_nara Ak (k>=1) => ((Ej j>=1 & $p1(j,k)) <=> $end31(k))":)Q"},
      {"check_p2", R"Q(eval check_p2 "?msd_nara Ak (k>=1) => ((Ej j>=1 & $p2(j,k)) <=> $end32(k))":)Q"},

      // Kimberling-Moses.
      {"a", R"Q(def a "?msd_nara $p02(j,x)":)Q"},
      {"b", R"Q(def b "?msd_nara $p1(j,x)":)Q"},
      {"item_i", R"Q(def item_i "?msd_nara Aj,x,y,z,w (j>=1 & $a(j,x) & $a(x,y) & $a(y,z) &
          $b(j,w)) => w=z+1":)Q"},
      {"item_ii", R"Q(def item_ii "?msd_nara Aj,x,y,z (j>=1 & $a(j,x) & $a(x,y) & $b(j,z))
          => z=y+j":)Q"},
      {"item_iii", R"Q(def item_iii "?msd_nara Aj,x,y,z,w (j>=1 & $a(j,x) & $a(x,y) & $a(y,z) &
          $b(x,w)) => w=z+x":)Q"},
      {"item_iv", R"Q(def item_iv "?msd_nara Aj,x,y,z (j>=1 & $a(j,x) & $b(j,y) & $a(y,z)) =>
          z=x+y":)Q"},
      {"item_v", R"Q(def item_v "?msd_nara Aj,x,y,z (j>=1 & $a(j,x) & $b(j,y) & $b(x,z)) =>
          z+1=x+y":)Q"},
      {"complementary", R"Q(eval complementary "?msd_nara Ak (k>=1) =>
          ((Ej j>=1 & $a(j,k)) <=> ~(Ej j>=1 & $b(j,k)))":)Q"},

      // Abelian properties and balance. pcount_c(i,x): x letters c among positions 1..i.
      {"pcount0", R"Q(def pcount0 "?msd_nara (x=0 & Ey $p0(1,y) & i<y) | (Ey,z $p0(x,y) &
          $p0(x+1,z) & i>=y & i<z)":)Q"},
      {"pcount1", R"Q(def pcount1 "?msd_nara (x=0 & Ey $p1(1,y) & i<y) | (Ey,z $p1(x,y) &
          $p1(x+1,z) & i>=y & i<z)":)Q"},
      {"pcount2", R"Q(def pcount2 "?msd_nara (x=0 & Ey $p2(1,y) & i<y) | (Ey,z $p2(x,y) &
          $p2(x+1,z) & i>=y & i<z)":)Q"},
      {"count0", R"Q(def count0 "?msd_nara Ex,y $pcount0(i,x) & $pcount0(i+m,y) & z+x=y":)Q"},
      {"count1", R"Q(def count1 "?msd_nara Ex,y $pcount1(i,x) & $pcount1(i+m,y) & z+x=y":)Q"},
      {"count2", R"Q(def count2 "?msd_nara Ex,y $pcount2(i,x) & $pcount2(i+m,y) & z+x=y":)Q"},
      {"abeleq", R"Q(def abeleq "?msd_nara Ex,y,z $count0(i,m,x) & $count0(j,m,x)
          & $count1(i,m,y) & $count1(j,m,y) & $count2(i,m,z) & $count2(j,m,z)":)Q"},
      {"absquare", R"Q(eval absquare "?msd_nara Am Ei $abeleq(i,i+m,m)":)Q"},
      {"abscube", R"Q(def abscube "?msd_nara Ei $abeleq(i,i+m,m) & $abeleq(i,i+2*m,m)":)Q"},
      {"large_abelian_cubes", R"Q(eval large_abelian_cubes "?msd_nara An $examples(n) => $abscube(n)":)Q"},
      {"large", R"Q(eval large "?msd_nara An $counterex(n) => ~$abscube(n)":)Q"},
      {"bal30", R"Q(def bal30 "?msd_nara Ai,j,n,x,y ($count0(i,n,x) & $count0(j,n,y))
          => (x<=y+3 & y<=x+3)":)Q"},
      {"bal31", R"Q(def bal31 "?msd_nara Ai,j,n,x,y ($count1(i,n,x) & $count1(j,n,y))
          => (x<=y+3 & y<=x+3)":)Q"},
      {"bal32", R"Q(def bal32 "?msd_nara Ai,j,n,x,y ($count2(i,n,x) & $count2(j,n,y))
          => (x<=y+3 & y<=x+3)":)Q"},
      {"bal20", R"Q(def bal20 "?msd_nara Ai,j,n,x,y ($count0(i,n,x) & $count0(j,n,y))
          => (x<=y+2 & y<=x+2)":)Q"},

      // H and the sequence S.
      {"h", R"Q(def h "?msd_nara Ex $rshift(i,x) & ((z=x+1 & $lastbit1(i)) |
          (z=x & ~$lastbit1(i)))":)Q"},
      {"hcheck", R"Q(eval hcheck "?msd_nara Ai,x,y,z,w (i>=1 & $h(i-1,x) & $h(x,y) &
          $h(y,z) & $h(i,w)) => i=w+z":)Q"},
      {"every", R"Q(def every "?msd_nara An Ex $h(x,n)":)Q"},
      {"nothree", R"Q(def nothree "?msd_nara ~En,x,y,z x<y & y<z & $h(x,n) & $h(y,n) & $h(z,n)":)Q"},
      {"two", R"Q(def two "?msd_nara Ex,y x<y & $h(x,n) & $h(y,n)":)Q"},
      {"one", R"Q(def one "?msd_nara ~$two(n)":)Q"},
      {"S", R"Q(combine S two=2 one=1:)Q"},
      {"increasing1", R"Q(eval increasing1 "?msd_nara An,x,y ($a202341(n,x) & $a202341(n+1,y)) => x<y":)Q"},
      {"correct1", R"Q(eval correct1 "?msd_nara An (Ex $a202341(x,n)) <=> $one(n)":)Q"},
      {"total1", R"Q(eval total1 "?msd_nara An Ex $a202341(n,x)":)Q"},
      {"functional1", R"Q(eval functional1 "?msd_nara An,x,y ($a202341(n,x) & $a202341(n,y)) => x=y":)Q"},
      {"increasing2", R"Q(eval increasing2 "?msd_nara An,x,y ($a202342(n,x) & $a202342(n+1,y)) => x<y":)Q"},
      {"correct2", R"Q(eval correct2 "?msd_nara An (Ex $a202342(x,n)) <=> $two(n)":)Q"},
      {"total2", R"Q(eval total2 "?msd_nara An Ex $a202342(n,x)":)Q"},
      {"functional2", R"Q(eval functional2 "?msd_nara An,x,y ($a202342(n,x) & $a202342(n,y)) => x=y":)Q"},
      {"check_a", R"Q(eval check_a "?msd_nara An,x (n>=1) => ($p0(n,x) <=> $a202342(n-1,x))":)Q"},
      {"irvine", R"Q(eval irvine "?msd_nara An,x,y (n>=1 & $p0(n,x) & $p1(n,y)) => x+n=y":)Q"},
      {"sef", R"Q(def sef "?msd_nara Au,v (u>=i & u<i+n & u+j=v+i) => S[u]=S[v]":)Q"},
      {"s_isaper", R"Q(def s_isaper "?msd_nara p>0 & p<=m & $sef(i,i+p,m-p)":)Q"},
      {"s_per", R"Q(def s_per "?msd_nara $s_isaper(i,m,p) & Aq (q<p) => ~$s_isaper(i,m,q)":)Q"},
      {"s_lp", R"Q(def s_lp "?msd_nara Ei $s_per(i,m,p) & Aj,q $s_per(j,m,q) => q>=p":)Q"},
      {"s_max", R"Q(def s_max "?msd_nara $s_lp(m,p) & Aq (q>m) => ~$s_lp(q,p)":)Q"},
      {"s_bignm", R"Q(def s_bignm "?msd_nara $s_max(m,p) & 5*m>14*p":)Q"},
      {"novel_s", R"Q(def novel_s n "?msd_nara Aj (j<i) => ~$sef(i,j,n)":)Q"},
      {"a2n", R"Q(def a2n n "?msd_nara (i=0&n=0)|(n>0&i<2*n)":)Q"},
      {"firstocc", R"Q(def firstocc "?msd_nara $h(x,n) & ~$h(x-1,n)":)Q"},
      {"check_same", R"Q(eval check_same "?msd_nara An,x (n>=1) => ($firstocc(n,x) <=> $a(n,x))":)Q"},

      // The Allouche-Johnson word.
      {"ja", R"Q(def ja "?msd_nara $odd1(n) & n>=0":)Q"},
      {"JA", R"Q(combine JA ja=1:)Q"},
      {"jaef_correct1", R"Q(eval jaef_correct1 "?msd_nara Ai,j $jaef(i,j,0)":)Q"},
      {"jaef_correct2", R"Q(eval jaef_correct2 "?msd_nara Ai,j,n $jaef(i,j,n) =>
          ($jaef(i,j,n+1) <=> JA[i+n]=JA[j+n])":)Q"},
      {"jaef_correct3", R"Q(eval jaef_correct3 "?msd_nara Ai,j,n $jaef(i,j,n+1) => $jaef(i,j,n)":)Q"},
      {"japer", R"Q(def japer "?msd_nara p>0 & p<=n & $jaef(i,i+p,n-p)":)Q"},
      {"jack0", R"Q(eval jack0 "?msd_nara Ai,p,n (p>0 & n>=4*p & $japer(i,n,p)) => p=1":)Q"},
      {"jack1", R"Q(eval jack1 "?msd_nara ~Ei,n,p $japer(i,n,p) & n>2*p+2":)Q"},
      {"jack2", R"Q(eval jack2 "?msd_nara ~Ei,n,p $japer(i,n,p) & n>2*p+1":)Q"},
      {"jack3", R"Q(eval jack3 "?msd_nara Am Ei,n,p (n>m) & $japer(i,n,p) & n=2*p+2":)Q"},
      {"novel_ja", R"Q(def novel_ja "?msd_nara Aj (j<i) => ~$jaef(i,j,n)":)Q"},
      {"jars", R"Q(def jars n "?msd_nara $novel_ja(i,n) & Ej $jaef(i,j,n) & JA[i+n]!=JA[j+n]":)Q"},
      {"j0_sum", R"Q(eval j0_sum "?msd_nara An (n>=10) => Ei,j n=i+j & JA[i]=@0 & JA[j]=@0":)Q"},
      {"j1_sum", R"Q(eval j1_sum "?msd_nara An (n>=2) => Ei,j n=i+j & JA[i]=@1 & JA[j]=@1":)Q"},
  };
  return entries;
}

const Entry* find_entry(const std::string& name) {
  for (const Entry& e : catalog())
    if (name == e.name) return &e;
  return nullptr;
}

const char* const kBuiltins[] = {"NA", "jaef", "a202341", "a202342"};

// H(0..n-1) from H(i) = i - H(H(H(i-1))).
std::vector<std::uint32_t> hofstadter_h(std::size_t n) {
  std::vector<std::uint32_t> h(std::max<std::size_t>(n, 1), 0);
  for (std::size_t i = 1; i < n; ++i) h[i] = static_cast<std::uint32_t>(i - h[h[h[i - 1]]]);
  return h;
}

// Positions i with S[i] = c, where S[i] counts the occurrences of i in H.
std::vector<std::uint64_t> s_positions(int c, std::size_t count) {
  std::size_t n = 4 * count + 64;
  while (true) {
    const auto h = hofstadter_h(n);
    std::vector<std::uint32_t> mult(n, 0);
    for (std::uint32_t v : h) ++mult[v];
    // Values near the end of the table may still gain a second occurrence.
    const std::size_t safe = h.back();
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < safe && out.size() < count; ++i)
      if (static_cast<int>(mult[i]) == c) out.push_back(i);
    if (out.size() == count) return out;
    n *= 2;
  }
}

// Grows a word prefix on demand and answers factor-equality queries by
// polynomial hashing modulo 2^61-1.
class FactorOracle {
 public:
  explicit FactorOracle(std::function<std::string(std::size_t)> gen) : gen_(std::move(gen)) {}

  bool equal(std::uint64_t i, std::uint64_t j, std::uint64_t n) {
    if (n == 0 || i == j) return true;
    ensure(std::max(i, j) + n);
    return hash(i, n) == hash(j, n);
  }

 private:
  static constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
    return r >= kMod ? r - kMod : r;
  }
  void ensure(std::uint64_t len) {
    if (len <= word_.size()) return;
    word_ = gen_(std::max<std::uint64_t>(len, 2 * word_.size()));
    pre_.assign(word_.size() + 1, 0);
    pow_.assign(word_.size() + 1, 1);
    for (std::size_t k = 0; k < word_.size(); ++k) {
      pre_[k + 1] = (mul(pre_[k], kBase) + static_cast<unsigned char>(word_[k]) + 1) % kMod;
      pow_[k + 1] = mul(pow_[k], kBase);
    }
  }
  std::uint64_t hash(std::uint64_t i, std::uint64_t n) const {
    return (pre_[i + n] + kMod - mul(pre_[i], pow_[n])) % kMod;
  }

  static constexpr std::uint64_t kBase = 1000003;
  std::function<std::string(std::size_t)> gen_;
  std::string word_;
  std::vector<std::uint64_t> pre_, pow_;
};

std::string aj_prefix(std::size_t len) { return xk_prefix(3, len); }

}  // namespace

Workspace::Workspace(Limits limits) {
  registry_.limits = limits;
  registry_.set_resolver([this](const std::string& name, Registry&) { return build(name); });
}

void Workspace::run_script(const std::string& script, std::ostream* log) {
  ScriptRunner(registry_, log ? log : log_).run(script);
}

std::vector<std::string> Workspace::catalog_names() {
  std::vector<std::string> out(std::begin(kBuiltins), std::end(kBuiltins));
  for (const Entry& e : catalog()) out.emplace_back(e.name);
  return out;
}

std::string Workspace::catalog_source(const std::string& name) {
  const Entry* e = find_entry(name);
  return e ? e->source : "";
}

bool Workspace::build(const std::string& name) {
  if (name == "NA") {
    registry_.add_word("NA", na_dfao());
    return true;
  }
  if (name == "jaef") {
    // Candidate from data, then the inductive certificate.
    FactorOracle word(aj_prefix);
    Automaton a = learn_relation(
        {"i", "j", "n"}, [&](const std::vector<std::uint64_t>& v) { return word.equal(v[0], v[1], v[2]); },
        LearnOptions{7, 20000, 40});
    if (log_) *log_ << "jaef: " << a.state_count() << " states (learned)\n";
    registry_.add_relation("jaef", std::move(a));
    for (const char* c : {"jaef_correct1", "jaef_correct2", "jaef_correct3"}) {
      if (!holds(c)) throw CertificationError(std::string("jaef: certificate ") + c + " is FALSE");
    }
    return true;
  }
  if (name == "a202341" || name == "a202342") {
    const int c = name == "a202341" ? 1 : 2;
    const std::vector<std::uint64_t> pos = s_positions(c, 10000);
    Automaton a = learn_relation(
        {"n", "x"},
        [&](const std::vector<std::uint64_t>& v) {
          if (v[0] >= pos.size()) throw SizeLimitError(name + ": learning needs more terms");
          return pos[v[0]] == v[1];
        },
        LearnOptions{10, 2000, 24});
    if (log_) *log_ << name << ": " << a.state_count() << " states (learned)\n";
    registry_.add_relation(name, std::move(a));
    const std::string k = c == 1 ? "1" : "2";
    for (const std::string check : {"increasing", "correct", "total", "functional"}) {
      if (!holds(check + k)) throw CertificationError(name + ": certificate " + check + k + " is FALSE");
    }
    return true;
  }
  const Entry* e = find_entry(name);
  if (!e) return false;
  ScriptRunner(registry_, log_).run(e->source);
  return true;
}

bool Workspace::holds(const std::string& name) {
  const Automaton& a = registry_.relation(name);
  if (a.track_count() != 0) throw CompileError(name + " is not a closed statement");
  return verdict(a);
}

SynchronizedSequence Workspace::sequence(const std::string& name) {
  static const char* const one_indexed[] = {"p0", "p1", "p2", "p02", "a", "b", "firstocc"};
  const Automaton& a = registry_.relation(name);
  if (a.track_count() != 2) throw CompileError(name + " is not a synchronized sequence");
  SynchronizedSequence s;
  s.name = name;
  s.automaton = a;
  s.one_indexed = std::find_if(std::begin(one_indexed), std::end(one_indexed),
                               [&](const char* n) { return name == n; }) != std::end(one_indexed);
  return s;
}

}  // namespace nara
