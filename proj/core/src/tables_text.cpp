#include "affweyl/fixtures.hpp"

namespace affweyl::detail {

// Decomposition and root-system tables, one record per row. Format:
//   table=<1..9> algebra=<A|B|C|D|E6|E7|E8|F4|G2> [<constraints>] subject=<...> <payload>
// Constraints are relational chains over i,j,k,l,m and rank (= r). Word tokens are
// comma-separated, leftmost first; `0` is the affine reflection sigma_0; peak(a,b),
// valley(a,b) and run(a,b) abbreviate the printed "sigma_a o ... o sigma_b o ... o
// sigma_a" runs of fundamental reflections. Tables 7-9 rows carry kind=, and their
// vectors are written in the orthonormal basis, e.g. (e(1)-e(2)-e(3)-e(4))/2.
extern const char* const kTablesText;
const char* const kTablesText = R"FIX(
# ---- Table 1: fundamental translations, classical families -------------------
table=1 algebra=A rank>=2 subject=alpha[1] word=a[2,r+1] , 0 , alpha[1] , theta
table=1 algebra=A 1<i<r subject=alpha[i] word=a[1,i] , 0 , a[i,r+1] , 0 , a[i+1,r+1] , 0 , a[1,i+1] , theta
table=1 algebra=A rank>=2 subject=alpha[r] word=a[1,r] , 0 , alpha[r] , theta
table=1 algebra=B subject=alpha[1] word=d[2] , 0 , d[1] , theta
table=1 algebra=B rank>=3 subject=alpha[2] word=a[1,3]+ , 0 , alpha[2] , theta
table=1 algebra=B 2<i<r subject=alpha[i] word=a[1,i]- , 0 , a[2,i]+ , 0 , a[2,i+1]+ , 0 , a[1,i+1]- , theta
table=1 algebra=B rank>=3 subject=alpha[r] word=a[1,r]- , 0 , a[2,r]+ , 0 , a[2,r]- , 0 , a[1,r]+ , theta
table=1 algebra=C subject=alpha[1] word=0 , a[1,2]+ , 0 , alpha[1]
table=1 algebra=C 1<i<r subject=alpha[i] word=a[1,i]- , 0 , a[1,i]+ , a[1,i+1]+ , 0 , a[1,i+1]-
table=1 algebra=C subject=alpha[r] word=a[1,r]- , 0 , a[1,r]+ , theta
table=1 algebra=D subject=alpha[1] word=a[2,r]- , 0 , a[1,r]+ , 0 , a[2,r]+ , 0 , a[1,r]- , theta
table=1 algebra=D subject=alpha[2] word=a[1,3]+ , 0 , alpha[2] , theta
table=1 algebra=D 2<i<r subject=alpha[i] word=a[1,i]- , 0 , a[2,i]+ , 0 , a[2,i+1]+ , 0 , a[1,i+1]- , theta
table=1 algebra=D subject=alpha[r] word=a[1,r-1]- , 0 , a[2,r-1]+ , 0 , a[2,r]- , 0 , a[1,r]+ , theta
# ---- Table 2: fundamental translations, exceptional families -----------------
table=2 algebra=E6 subject=alpha[1] word=s[+--++] , 0 , a[2,3]+ , 0 , a[1,3]+ , 0 , s[-+-++] , theta
table=2 algebra=E6 subject=alpha[2] word=s[++--+] , 0 , a[3,4]+ , 0 , a[2,4]+ , 0 , s[+-+-+] , theta
table=2 algebra=E6 subject=alpha[3] word=s[+++--] , 0 , a[4,5]+ , 0 , a[3,5]+ , 0 , s[++-+-] , theta
table=2 algebra=E6 subject=alpha[4] word=s[-+++-] , 0 , a[1,5]+ , 0 , a[1,4]+ , 0 , s[-++-+] , theta
table=2 algebra=E6 subject=alpha[5] word=a[2,3]+ , 0 , s[+--++] , 0 , a[4,5]+ , 0 , s[+++--] , theta
table=2 algebra=E6 subject=alpha[6] word=s[--+++] , 0 , alpha[6] , theta
table=2 algebra=E7 subject=alpha[1] word=s[+-++++] , 0 , s[-+----] , 0 , s[+-----] , 0 , s[-+++++] , theta
table=2 algebra=E7 subject=alpha[2] word=s[++-+++] , 0 , s[--+---] , 0 , s[-+----] , 0 , s[+-++++] , theta
table=2 algebra=E7 subject=alpha[3] word=s[+++-++] , 0 , s[---+--] , 0 , s[--+---] , 0 , s[++-+++] , theta
table=2 algebra=E7 subject=alpha[4] word=s[++++-+] , 0 , s[----+-] , 0 , s[---+--] , 0 , s[+++-++] , theta
table=2 algebra=E7 subject=alpha[5] word=s[+++++-] , 0 , s[-----+] , 0 , s[----+-] , 0 , s[++++-+] , theta
table=2 algebra=E7 subject=alpha[6] word=s[-+++++] , 0 , alpha[6] , theta
table=2 algebra=E7 subject=alpha[7] word=s[--+++-] , 0 , s[++---+] , 0 , s[-----+] , 0 , s[+++++-] , theta
table=2 algebra=E8 1<=i<=5 subject=alpha[i] word=a[i,7]+ , 0 , a[i,8]- , 0 , a[i+1,8]- , 0 , a[i+1,7]+ , theta
table=2 algebra=E8 subject=alpha[6] word=a[6,8]+ , 0 , alpha[6] , theta
table=2 algebra=E8 subject=alpha[7] word=s[--+++++] , 0 , s[++----+] , 0 , a[2,7]+ , 0 , a[2,8]- , theta
table=2 algebra=E8 subject=alpha[8] word=a[1,7]- , 0 , a[1,8]+ , 0 , a[2,8]- , 0 , a[2,7]+ , theta
table=2 algebra=F4 subject=alpha[1] word=a[2,3]+ , 0 , a[1,3]- , 0 , a[2,4]+ , 0 , a[1,4]- , theta
table=2 algebra=F4 subject=alpha[2] word=a[1,3]+ , 0 , alpha[2] , theta
table=2 algebra=F4 subject=alpha[3] word=a[1,3]- , 0 , a[2,3]+ , 0 , a[2,4]+ , 0 , a[1,4]- , theta
table=2 algebra=F4 subject=alpha[4] word=a[1,4]- , 0 , a[2,4]+ , 0 , a[2,4]- , 0 , a[1,4]+ , theta
table=2 algebra=G2 subject=alpha[1] word=alpha[2] , 0 , s[+-+] , 0 , alpha[2] , 0 , s[+-+] , theta
table=2 algebra=G2 subject=alpha[2] word=0 , s[+-+] , 0 , alpha[2]
# ---- Table 3: simple roots with alpha_i . theta^dual = 1 ----------------------
table=3 algebra=A rank>=2 subject=pairings value=1 , r
table=3 algebra=B subject=pairings value=2
table=3 algebra=C subject=pairings value=1
table=3 algebra=D subject=pairings value=2
table=3 algebra=E6 subject=pairings value=6
table=3 algebra=E7 subject=pairings value=6
table=3 algebra=E8 subject=pairings value=6
table=3 algebra=F4 subject=pairings value=2
table=3 algebra=G2 subject=pairings value=2
# ---- Table 4: classical Weyl reflection decompositions, A-D ------------------
table=4 algebra=A 1<=i<j<=r+1 subject=a[i,j] word=peak(i,j-1)
table=4 algebra=B 1<=i<j<=r subject=a[i,j]- word=peak(i,j-1)
table=4 algebra=B 1<=i<r subject=d[i] word=peak(i,r)
table=4 algebra=B 1<=i<j<=r subject=a[i,j]+ word=d[j] , a[i,j]- , d[j]
table=4 algebra=C 1<=i<j<=r subject=a[i,j]- word=peak(i,j-1)
table=4 algebra=C 1<=i<r subject=a[i,r]+ word=valley(r,i)
table=4 algebra=C 1<=i<j<r subject=a[i,j]+ word=run(j,r-1) , a[i,r]+ , run(r-1,j)
table=4 algebra=C 1<=i<r subject=d[i] word=a[i,r]- , r , a[i,r]-
table=4 algebra=D 1<=i<j<=r subject=a[i,j]- word=peak(i,j-1)
table=4 algebra=D 1<=i<r-1 subject=a[i,r]+ word=r , valley(r-2,i) , r
table=4 algebra=D 1<=i<r-1 subject=a[i,r-1]+ word=valley(r,i)
table=4 algebra=D 1<=i<j<r-1 subject=a[i,j]+ word=run(j,r-2) , a[i,r-1]+ , run(r-2,j)
# ---- Table 5: classical Weyl reflection decompositions, E6 and E7 ------------
table=5 algebra=E6 1<=i<j<=5 subject=a[i,j]- word=peak(i,j-1)
table=5 algebra=E6 3<=j<=5 subject=a[1,j]+ word=6 , a[2,j]- , 6
table=5 algebra=E6 3<=j<=5 subject=a[2,j]+ word=6 , a[1,j]- , 6
table=5 algebra=E6 4<=j<=5 subject=a[3,j]+ word=2 , a[2,j]+ , 2
table=5 algebra=E6 subject=a[4,5]+ word=3 , a[3,5]+ , 3
table=5 algebra=E6 2<=i<=5 subject=s[plus:i] word=a[1,i]- , 5 , a[1,i]-
table=5 algebra=E6 i=1 i<j<k<=5 subject=s[plus:i,j,k] word=a[j,k]+ , 5 , a[j,k]+
table=5 algebra=E6 2<=i i<j<k<=5 subject=s[plus:i,j,k] word=a[j,k]+ , a[1,i]- , 5 , a[1,i]- , a[j,k]+
table=5 algebra=E6 subject=s[+++++] word=a[4,5]+ , a[2,3]+ , 5 , a[2,3]+ , a[4,5]+
table=5 algebra=E7 1<=i<j<=6 subject=a[i,j]- word=peak(i,j-1)
table=5 algebra=E7 3<=j<=6 subject=a[1,j]+ word=7 , a[2,j]- , 7
table=5 algebra=E7 3<=j<=6 subject=a[2,j]+ word=7 , a[1,j]- , 7
table=5 algebra=E7 4<=j<=6 subject=a[3,j]+ word=2 , a[2,j]+ , 2
table=5 algebra=E7 5<=j<=6 subject=a[4,j]+ word=3 , a[3,j]+ , 3
table=5 algebra=E7 subject=a[5,6]+ word=4 , a[4,6]+ , 4
table=5 algebra=E7 2<=i<=6 subject=s[plus:i] word=a[1,i]- , 6 , a[1,i]-
table=5 algebra=E7 i=1 i<j<k<=6 subject=s[plus:i,j,k] word=a[j,k]+ , 6 , a[j,k]+
table=5 algebra=E7 2<=i i<j<k<=6 subject=s[plus:i,j,k] word=a[j,k]+ , a[1,i]- , 6 , a[1,i]- , a[j,k]+
table=5 algebra=E7 i=1 i<j<k<l<m<=6 subject=s[plus:i,j,k,l,m] word=a[l,m]+ , a[j,k]+ , 6 , a[j,k]+ , a[l,m]+
table=5 algebra=E7 subject=s[-+++++] word=a[5,6]+ , a[3,4]+ , a[1,2]- , 6 , a[1,2]- , a[3,4]+ , a[5,6]+
table=5 algebra=E7 subject=theta word=6 , s[-+++++] , 6
# ---- Table 6: classical Weyl reflection decompositions, E8, F4, G2 -----------
table=6 algebra=E8 1<=i<j<=7 subject=a[i,j]- word=peak(i,j-1)
table=6 algebra=E8 3<=j<=7 subject=a[1,j]+ word=8 , a[2,j]- , 8
table=6 algebra=E8 3<=j<=7 subject=a[2,j]+ word=8 , a[1,j]- , 8
table=6 algebra=E8 3<=i<=6 i<j<=7 subject=a[i,j]+ word=i-1 , a[i-1,j]+ , i-1
table=6 algebra=E8 2<=i<=7 subject=s[plus:i] word=a[1,i]- , 7 , a[1,i]-
table=6 algebra=E8 i=1 i<j<k<=7 subject=s[plus:i,j,k] word=a[j,k]+ , 7 , a[j,k]+
table=6 algebra=E8 2<=i i<j<k<=7 subject=s[plus:i,j,k] word=a[j,k]+ , a[1,i]- , 7 , a[1,i]- , a[j,k]+
table=6 algebra=E8 i=1 i<j<k<l<m<=7 subject=s[plus:i,j,k,l,m] word=a[l,m]+ , a[j,k]+ , 7 , a[j,k]+ , a[l,m]+
table=6 algebra=E8 2<=i i<j<k<l<m<=7 subject=s[plus:i,j,k,l,m] word=a[l,m]+ , a[j,k]+ , a[1,i]- , 7 , a[1,i]- , a[j,k]+ , a[l,m]+
table=6 algebra=E8 subject=s[+++++++] word=a[6,7]+ , a[4,5]+ , a[2,3]+ , 7 , a[2,3]+ , a[4,5]+ , a[6,7]+
table=6 algebra=E8 subject=a[7,8]- word=7 , s[-+++++-] , 7
table=6 algebra=E8 1<=i<7 subject=a[i,8]- word=i , a[i+1,8]- , i
table=6 algebra=E8 subject=a[1,8]+ word=7 , s[+++++++] , 7
table=6 algebra=E8 2<=i<=7 subject=a[i,8]+ word=i-1 , a[i-1,8]+ , i-1
table=6 algebra=F4 subject=s[--+] word=4 , 1 , 4
table=6 algebra=F4 subject=s[-+-] word=3 , s[--+] , 3
table=6 algebra=F4 subject=s[-++] word=4 , s[-+-] , 4
table=6 algebra=F4 subject=s[+-+] word=2 , s[-++] , 2
table=6 algebra=F4 subject=s[++-] word=3 , s[+-+] , 3
table=6 algebra=F4 subject=s[+++] word=4 , s[++-] , 4
table=6 algebra=F4 subject=s[+--] word=2 , s[-+-] , 2
table=6 algebra=F4 subject=d[1] word=1 , s[+++] , 1
table=6 algebra=F4 subject=d[2] word=s[-++] , s[+++] , s[-++]
table=6 algebra=F4 subject=d[3] word=s[+-+] , s[+++] , s[+-+]
table=6 algebra=F4 subject=a[2,4]- word=3 , 2 , 3
table=6 algebra=F4 subject=a[1,2]- word=s[--+] , 3 , s[--+]
table=6 algebra=F4 subject=a[1,3]- word=s[--+] , a[2,4]- , s[--+]
table=6 algebra=F4 subject=a[1,4]- word=s[-+-] , 2 , s[-+-]
table=6 algebra=F4 1<=i<j<=4 subject=a[i,j]+ word=d[j] , a[i,j]- , d[j]
table=6 algebra=G2 subject=a[1,3] word=2 , 1 , 2
table=6 algebra=G2 subject=a[2,3] word=1 , 2 , 1 , 2 , 1
table=6 algebra=G2 subject=s[+-+] word=1 , 2 , 1
table=6 algebra=G2 subject=theta word=2 , 1 , 2 , 1 , 2
# ---- Table 7: root system embeddings, A-D -------------------------------------
table=7 algebra=A kind=simple 1<=i<=r subject=alpha[i] value=e(i)-e(i+1)
table=7 algebra=A kind=root 1<=i<j<=r+1 subject=a[i,j] value=e(i)-e(j)
table=7 algebra=A kind=theta subject=theta marks=fill(1) value=e(1)-e(r+1)
table=7 algebra=B kind=simple 1<=i<r subject=alpha[i] value=e(i)-e(i+1)
table=7 algebra=B kind=simple i=r subject=alpha[i] value=e(r)
table=7 algebra=B kind=root 1<=i<j<=r subject=a[i,j]- value=e(i)-e(j)
table=7 algebra=B kind=root 1<=i<j<=r subject=a[i,j]+ value=e(i)+e(j)
table=7 algebra=B kind=root 1<=i<=r subject=d[i] value=e(i)
table=7 algebra=B kind=theta subject=theta marks=1,fill(2) value=e(1)+e(2)
table=7 algebra=C kind=simple 1<=i<r subject=alpha[i] value=e(i)-e(i+1)
table=7 algebra=C kind=simple i=r subject=alpha[i] value=2e(r)
table=7 algebra=C kind=root 1<=i<j<=r subject=a[i,j]- value=e(i)-e(j)
table=7 algebra=C kind=root 1<=i<j<=r subject=a[i,j]+ value=e(i)+e(j)
table=7 algebra=C kind=root 1<=i<=r subject=d[i] value=2e(i)
table=7 algebra=C kind=theta subject=theta marks=fill(2),1 value=2e(1)
table=7 algebra=D kind=simple 1<=i<r subject=alpha[i] value=e(i)-e(i+1)
table=7 algebra=D kind=simple i=r subject=alpha[i] value=e(r-1)+e(r)
table=7 algebra=D kind=root 1<=i<j<=r subject=a[i,j]- value=e(i)-e(j)
table=7 algebra=D kind=root 1<=i<j<=r subject=a[i,j]+ value=e(i)+e(j)
table=7 algebra=D kind=theta subject=theta marks=1,fill(2),1,1 value=e(1)+e(2)
# ---- Table 8: root system embeddings, E6, E7, E8 ------------------------------
table=8 algebra=E6 kind=simple 1<=i<=4 subject=alpha[i] value=-e(i)+e(i+1)
table=8 algebra=E6 kind=simple i=5 subject=alpha[i] value=(e(1)-e(2)-e(3)-e(4)-e(5)-e(6)-e(7)+e(8))/2
table=8 algebra=E6 kind=simple i=6 subject=alpha[i] value=e(1)+e(2)
table=8 algebra=E6 kind=root 1<=i<j<=5 subject=a[i,j]- value=-e(i)+e(j)
table=8 algebra=E6 kind=root 1<=i<j<=5 subject=a[i,j]+ value=e(i)+e(j)
table=8 algebra=E6 kind=signs slots=5 parity=even subject=s value=(signs(1,5)-e(6)-e(7)+e(8))/2
table=8 algebra=E6 kind=theta subject=theta marks=2,3,2,1,1,2 value=(e(1)+e(2)+e(3)+e(4)+e(5)-e(6)-e(7)+e(8))/2
table=8 algebra=E7 kind=simple 1<=i<=5 subject=alpha[i] value=-e(i)+e(i+1)
table=8 algebra=E7 kind=simple i=6 subject=alpha[i] value=(e(1)-e(2)-e(3)-e(4)-e(5)-e(6)-e(7)+e(8))/2
table=8 algebra=E7 kind=simple i=7 subject=alpha[i] value=e(1)+e(2)
table=8 algebra=E7 kind=root 1<=i<j<=6 subject=a[i,j]- value=-e(i)+e(j)
table=8 algebra=E7 kind=root 1<=i<j<=6 subject=a[i,j]+ value=e(i)+e(j)
table=8 algebra=E7 kind=root subject=a[7,8]- value=-e(7)+e(8)
table=8 algebra=E7 kind=signs slots=6 parity=odd subject=s value=(signs(1,6)-e(7)+e(8))/2
table=8 algebra=E7 kind=theta subject=theta marks=3,4,3,2,1,2,2 value=-e(7)+e(8)
table=8 algebra=E8 kind=simple 1<=i<=6 subject=alpha[i] value=-e(i)+e(i+1)
table=8 algebra=E8 kind=simple i=7 subject=alpha[i] value=(e(1)-e(2)-e(3)-e(4)-e(5)-e(6)-e(7)+e(8))/2
table=8 algebra=E8 kind=simple i=8 subject=alpha[i] value=e(1)+e(2)
table=8 algebra=E8 kind=root 1<=i<j<=8 subject=a[i,j]- value=-e(i)+e(j)
table=8 algebra=E8 kind=root 1<=i<j<=8 subject=a[i,j]+ value=e(i)+e(j)
table=8 algebra=E8 kind=signs slots=7 parity=even subject=s value=(signs(1,7)+e(8))/2
table=8 algebra=E8 kind=theta subject=theta marks=4,6,5,4,3,2,2,3 value=e(7)+e(8)
# ---- Table 9: root system embeddings, F4 and G2 -------------------------------
table=9 algebra=F4 kind=simple i=1 subject=alpha[i] value=(e(1)-e(2)-e(3)-e(4))/2
table=9 algebra=F4 kind=simple i=2 subject=alpha[i] value=e(2)-e(3)
table=9 algebra=F4 kind=simple i=3 subject=alpha[i] value=e(3)-e(4)
table=9 algebra=F4 kind=simple i=4 subject=alpha[i] value=e(4)
table=9 algebra=F4 kind=signs slots=3 parity=any subject=s value=(e(1)+signs(2,4))/2
table=9 algebra=F4 kind=root 1<=i<j<=4 subject=a[i,j]- value=e(i)-e(j)
table=9 algebra=F4 kind=root 1<=i<j<=4 subject=a[i,j]+ value=e(i)+e(j)
table=9 algebra=F4 kind=root 1<=i<=4 subject=d[i] value=e(i)
table=9 algebra=F4 kind=theta subject=theta marks=2,2,3,4 value=e(1)+e(2)
table=9 algebra=G2 kind=simple i=1 subject=alpha[i] value=e(1)-e(2)
table=9 algebra=G2 kind=simple i=2 subject=alpha[i] value=-2e(1)+e(2)+e(3)
table=9 algebra=G2 kind=root subject=alpha[1] value=e(1)-e(2)
table=9 algebra=G2 kind=root subject=alpha[2] value=-2e(1)+e(2)+e(3)
table=9 algebra=G2 kind=root subject=a[1,3] value=-e(1)+e(3)
table=9 algebra=G2 kind=root subject=a[2,3] value=-e(2)+e(3)
table=9 algebra=G2 kind=root subject=s[+-+] value=e(1)-2e(2)+e(3)
table=9 algebra=G2 kind=root subject=s[--+] value=-e(1)-e(2)+2e(3)
table=9 algebra=G2 kind=theta subject=theta marks=3,2 value=-e(1)-e(2)+2e(3)
)FIX";

} // namespace affweyl::detail
