import sys, time
sys.path.insert(0, '/root/pkg/tests')
from helpers import a5_on15, s3xs3_on339, l32_on21, s5_on10, s3xs3_on33
from axial.engine import run, EngineOptions
from axial.shape import shape_graph, enumerate_shapes

def go(name, mk, labels=None):
    group, tau = mk()
    shapes = enumerate_shapes(shape_graph(group, tau))
    for sh in shapes:
        if labels and sh.label not in labels:
            continue
        t0 = time.monotonic()
        r = run(group, tau, sh, EngineOptions(time_limit=3200))
        d = r.algebra.dim if r.algebra else r.stats.get('final_dim')
        print('%s %-12s -> %-10s dim %-5s exp %d max %d  %.1fs' % (
            name, sh.label, r.status, d, r.stats['expansions'],
            r.stats['max_dim'], time.monotonic() - t0), flush=True)

go('L32/21', l32_on21, labels=('4B3C',))
go('A5/15', a5_on15)
go('S3xS3/339', s3xs3_on339)
go('L32/21', l32_on21, labels=('4B3A',))
go('L32/21', l32_on21, labels=('4A3C',))
go('S5/10', s5_on10, labels=('3A2A',))
go('S3xS3/33', s3xs3_on33, labels=('3A3A2A',))
