import pytest

CSV_HEADER = ("instance,algorithm,n,m,d,status,solutions,iterations,"
              "transition_nodes,time_preprocess_s,time_solve_s,"
              "red_count,blue_count,max_frontier\n")

# Three instances of one group, solved by igmda throughout; bn times out on
# the third. Values are chosen so the geometric means come out exactly:
# igmda time (1*2*5)^(1/3), bn time sqrt(32), speedup (4/1 * 8/2)^(1/2) = 4.
SIX_ROWS = CSV_HEADER + "".join([
    "runs/complete_n10_d3_anticorrelated_s1.momst,igmda,10,45,3,solved,10,100,16,0.01,1.0,0,0,10\n",
    "runs/complete_n10_d3_anticorrelated_s1.momst,bn,10,45,3,solved,10,200,32,0.01,4.0,0,0,10\n",
    "runs/complete_n10_d3_anticorrelated_s2.momst,igmda,10,45,3,solved,20,400,64,0.01,2.0,0,0,20\n",
    "runs/complete_n10_d3_anticorrelated_s2.momst,bn,10,45,3,solved,20,800,128,0.01,8.0,0,0,20\n",
    "runs/complete_n10_d3_anticorrelated_s3.momst,igmda,10,45,3,solved,40,1600,256,0.01,5.0,0,0,40\n",
    "runs/complete_n10_d3_anticorrelated_s3.momst,bn,10,45,3,timeout,0,99,8,0.01,7200.0,0,0,0\n",
])


@pytest.fixture
def six_row_csv(tmp_path):
    path = tmp_path / "bench.csv"
    path.write_text(SIX_ROWS, encoding="utf-8")
    return str(path)
